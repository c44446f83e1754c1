use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, ensure, Context, Result};
use serde::Serialize;
use superpair::expr::parse_elements;
use superpair::families::{abelian, heisenberg_even, heisenberg_odd};
use superpair::formulas::{self, FormulaResult, FormulaValue};
use superpair::freesuper::{degree_dims, dim_multidegree, multidegree_parity, multidegrees, super_witt, witt as witt_count, DegreeDims, GradedAlphabet, TruncatedFreeAlgebra};
use superpair::json::{from_json, to_json};
use superpair::pairs::{FreePresentation, PairReport};
use superpair::report::{build_report, GridBounds, ENVELOPE};
use superpair::scalar::format_combination;
use superpair::{GradedIdeal, LieSuperalgebra, Parity, Subspace, SuperDim};

use crate::{text, ConstructArgs, Family, Format, FreeBasisArgs, OracleArgs, PairArgs, ReportArgs, WittArgs};

pub struct Ctx {
    pub format: Format,
    pub verbose: bool,
}

impl Ctx {
    fn emit<T: Serialize>(&self, value: &T, render: impl FnOnce(&T) -> String) -> Result<()> {
        match self.format {
            Format::Json => write_stdout(&(serde_json::to_string_pretty(value)? + "\n")),
            Format::Text => write_stdout(&render(value)),
        }
    }
}

/// Writes to stdout; a closed pipe (`| head`) is not an error.
fn write_stdout(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn parse_list(text: &str, what: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|p| p.trim().parse::<usize>().with_context(|| format!("{what}: `{}` is not a non-negative integer", p.trim())))
        .collect()
}

fn read_algebra(path: &Path) -> Result<LieSuperalgebra> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Reads an algebra and refuses it unless the axioms hold.
fn load_checked(path: &Path) -> Result<LieSuperalgebra> {
    let l = read_algebra(path)?;
    if let Some(v) = l.check_axioms().first() {
        bail!("{} is not a Lie superalgebra: {v}", path.display());
    }
    Ok(l)
}

fn element_names(l: &LieSuperalgebra, s: &Subspace) -> Vec<String> {
    s.basis()
        .iter()
        .map(|v| {
            let terms: Vec<(String, superpair::Scalar)> = v.iter().map(|(k, c)| (l.basis_name(*k).to_string(), c.clone())).collect();
            format_combination(&terms)
        })
        .collect()
}

fn resolve_ideal(l: &LieSuperalgebra, spec: Option<&str>, closure: bool) -> Result<GradedIdeal> {
    let Some(spec) = spec else { return Ok(l.whole()) };
    let elements = parse_elements(l, spec)?;
    if closure {
        return Ok(l.ideal_closure(&elements));
    }
    Ok(l.ideal(l.graded_span(&elements))?)
}

#[derive(Serialize)]
pub struct VerifyOutput {
    pub algebra: String,
    pub dim: SuperDim,
    pub ok: bool,
    pub violations: Vec<String>,
}

pub fn verify(ctx: &Ctx, path: &Path) -> Result<ExitCode> {
    let l = read_algebra(path)?;
    let violations: Vec<String> = l.check_axioms().iter().map(|v| v.to_string()).collect();
    let out = VerifyOutput {
        algebra: l.name().unwrap_or_default().to_string(),
        dim: l.dim(),
        ok: violations.is_empty(),
        violations,
    };
    ctx.emit(&out, text::verify)?;
    Ok(if out.ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

pub fn construct(ctx: &Ctx, a: &ConstructArgs) -> Result<ExitCode> {
    let mut l = match a.family {
        Family::Abelian => abelian(a.m, a.n),
        Family::HeisEven => heisenberg_even(a.m, a.n)?,
        Family::HeisOdd => {
            ensure!(a.n == 0, "heis-odd takes only --m");
            heisenberg_odd(a.m)?
        }
    };
    if let Some(spec) = &a.plus_abelian {
        let p = parse_list(spec, "--plus-abelian")?;
        ensure!(p.len() == 2, "--plus-abelian expects `a,b`");
        let name = format!("{}+A({}|{})", l.name().unwrap_or("L"), p[0], p[1]);
        l = l.direct_sum(&abelian(p[0], p[1])).with_name(name);
    }
    match ctx.format {
        Format::Json => write_stdout(&(to_json(&l) + "\n"))?,
        Format::Text => write_stdout(&text::algebra(&l))?,
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
pub struct PairOutput {
    pub algebra: String,
    pub ideal: Vec<String>,
    pub ideal_dim: SuperDim,
    #[serde(flatten)]
    pub report: PairReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exterior_center: Option<Vec<String>>,
}

fn pair_output(a: &PairArgs, with_center: bool) -> Result<PairOutput> {
    let l = load_checked(&a.algebra)?;
    let ideal = resolve_ideal(&l, a.ideal.as_deref(), a.closure)?;
    let pres = FreePresentation::present(&l)?;
    let pair = pres.extend_to_pair(&ideal)?;
    let center = pair.exterior_center()?;
    Ok(PairOutput {
        algebra: l.name().unwrap_or_default().to_string(),
        ideal: element_names(&l, &ideal),
        ideal_dim: ideal.dim(),
        report: PairReport {
            multiplier: pair.multiplier(),
            exterior_product: pair.exterior_product(),
            exterior_center_dim: center.dim(),
            capable: center.is_zero(),
        },
        exterior_center: with_center.then(|| element_names(&l, &center)),
    })
}

pub fn multiplier(ctx: &Ctx, a: &PairArgs) -> Result<ExitCode> {
    ctx.emit(&pair_output(a, false)?, text::pair)?;
    Ok(ExitCode::SUCCESS)
}

pub fn capability(ctx: &Ctx, a: &PairArgs) -> Result<ExitCode> {
    ensure!(a.ideal.is_some(), "capability needs --ideal");
    ctx.emit(&pair_output(a, true)?, text::pair)?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
pub struct DegreeRow {
    pub degree: usize,
    pub dim: SuperDim,
    pub predicted: SuperDim,
    pub agrees: bool,
}

#[derive(Serialize)]
pub struct MultidegreeRow {
    pub multidegree: Vec<usize>,
    pub parity: Parity,
    pub super_witt: u64,
    pub enumerated: usize,
}

#[derive(Serialize)]
pub struct MonomialRow {
    pub degree: usize,
    pub multidegree: Vec<usize>,
    pub parity: Parity,
    pub bracket: String,
}

#[derive(Serialize)]
pub struct FreeBasisOutput {
    pub alphabet: Vec<String>,
    pub even_letters: usize,
    pub odd_letters: usize,
    pub max_degree: usize,
    /// Total dimension per degree.
    pub dims: Vec<usize>,
    pub degrees: Vec<DegreeRow>,
    pub multidegrees: Vec<MultidegreeRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monomials: Option<Vec<MonomialRow>>,
}

pub fn free_basis(ctx: &Ctx, a: &FreeBasisArgs) -> Result<ExitCode> {
    ensure!(a.even + a.odd > 0, "the alphabet needs at least one letter");
    let letters = a.even + a.odd;
    ensure!(
        letters <= ENVELOPE.free_max_letters && a.max_degree <= ENVELOPE.free_max_degree,
        "free-basis supports at most {} letters and degree {}",
        ENVELOPE.free_max_letters,
        ENVELOPE.free_max_degree
    );
    let f = TruncatedFreeAlgebra::build(GradedAlphabet::standard(a.even, a.odd), a.max_degree)?;
    let parities = f.alphabet().parities().to_vec();
    let counts = f.multidegree_counts();
    let mut degrees = Vec::new();
    let mut rows = Vec::new();
    for (r, dim) in f.degree_dims().into_iter().enumerate() {
        let degree = r + 1;
        let d = degree_dims(a.even, a.odd, degree);
        let predicted = SuperDim::new(d.dim_even as usize, d.dim_odd as usize);
        degrees.push(DegreeRow { degree, dim, predicted, agrees: dim == predicted });
        for alpha in multidegrees(letters, degree) {
            let sw = super_witt(&alpha, &parities);
            let enumerated = counts.get(&alpha).copied().unwrap_or(0);
            if sw == 0 && enumerated == 0 {
                continue;
            }
            rows.push(MultidegreeRow { parity: multidegree_parity(&alpha, &parities), multidegree: alpha, super_witt: sw, enumerated });
        }
    }
    let monomials = a.monomials.then(|| {
        f.basis()
            .iter()
            .map(|b| MonomialRow {
                degree: b.degree,
                multidegree: b.multidegree.clone(),
                parity: b.parity,
                bracket: b.monomial.render(f.alphabet()),
            })
            .collect()
    });
    let out = FreeBasisOutput {
        alphabet: (0..letters).map(|i| f.alphabet().name(i).to_string()).collect(),
        even_letters: a.even,
        odd_letters: a.odd,
        max_degree: a.max_degree,
        dims: degrees.iter().map(|d| d.dim.total()).collect(),
        degrees,
        multidegrees: rows,
        monomials,
    };
    ctx.emit(&out, text::free_basis)?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
pub struct WittRow {
    pub multidegree: Vec<usize>,
    pub parity: Parity,
    pub witt: u64,
    pub super_witt: u64,
    /// Signed necklace count, an independent evaluation of `super_witt`.
    pub necklace: i64,
}

#[derive(Serialize)]
pub struct WittOutput {
    pub even_letters: usize,
    pub odd_letters: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<DegreeDims>,
    pub rows: Vec<WittRow>,
}

fn witt_output(a: &WittArgs) -> Result<WittOutput> {
    let letters = a.even + a.odd;
    ensure!(letters > 0, "the alphabet needs at least one letter");
    let parities: Vec<Parity> = (0..letters).map(|i| if i < a.even { Parity::Even } else { Parity::Odd }).collect();
    let row = |alpha: Vec<usize>| WittRow {
        parity: multidegree_parity(&alpha, &parities),
        witt: witt_count(&alpha),
        super_witt: super_witt(&alpha, &parities),
        necklace: dim_multidegree(&alpha, &parities),
        multidegree: alpha,
    };
    let (degree, rows) = match (&a.alpha, a.degree) {
        (Some(spec), _) => {
            let alpha = parse_list(spec, "--alpha")?;
            ensure!(alpha.len() == letters, "--alpha has {} entries for {letters} letters", alpha.len());
            ensure!(alpha.iter().sum::<usize>() > 0, "--alpha must be nonzero");
            (None, vec![row(alpha)])
        }
        (None, Some(r)) => {
            ensure!(r >= 1, "--degree must be at least 1");
            (Some(degree_dims(a.even, a.odd, r)), multidegrees(letters, r).into_iter().map(row).collect())
        }
        (None, None) => bail!("give --alpha or --degree"),
    };
    Ok(WittOutput { even_letters: a.even, odd_letters: a.odd, degree, rows })
}

pub fn witt(ctx: &Ctx, a: &WittArgs) -> Result<ExitCode> {
    ctx.emit(&witt_output(a)?, text::witt)?;
    Ok(ExitCode::SUCCESS)
}

fn plain(value: FormulaValue, source: &'static str) -> FormulaResult {
    FormulaResult { value, source, caveat: None }
}

fn oracle_result(a: &OracleArgs) -> Result<FormulaResult> {
    let params = parse_list(&a.params, "--params")?;
    let pair = a.pair.as_deref().map(|p| parse_list(p, "--pair")).transpose()?;
    if let Some(p) = &pair {
        ensure!(p.len() == 2, "--pair expects `k,h`");
    }
    let two = |what: &str| -> Result<(usize, usize)> {
        ensure!(params.len() == 2, "{what} expects --params m,n");
        Ok((params[0], params[1]))
    };
    Ok(match (a.family, pair, a.capable) {
        (Family::Abelian, None, false) => {
            let (m, n) = two("abelian")?;
            plain(FormulaValue::Dim(formulas::dim_mult_abelian(m, n).into()), formulas::SRC_ABELIAN)
        }
        (Family::Abelian, None, true) => {
            let (m, n) = two("abelian")?;
            plain(FormulaValue::Bool(formulas::capable_abelian(m, n)), "abelian capability")
        }
        (Family::Abelian, Some(p), false) => {
            let (m, n) = two("abelian")?;
            let d = formulas::dim_mult_pair_abelian(m, n, p[0], p[1])?;
            plain(FormulaValue::Dim(d.into()), formulas::SRC_PAIR_ABELIAN)
        }
        (Family::Abelian, Some(p), true) => {
            let (m, n) = two("abelian")?;
            plain(FormulaValue::Bool(formulas::capable_abelian_pair(m, n, p[0], p[1])?), "abelian pair capability")
        }
        (Family::HeisEven, None, false) => {
            let (m, n) = two("heis-even")?;
            plain(FormulaValue::Dim(formulas::dim_mult_heis_even(m, n)?.into()), formulas::SRC_HEIS_EVEN)
        }
        (Family::HeisEven, None, true) => {
            let (m, n) = two("heis-even")?;
            plain(FormulaValue::Bool(formulas::capable_heis(m, n)?), "even-center Heisenberg capability")
        }
        (Family::HeisEven, Some(p), false) => {
            let (m, n) = two("heis-even")?;
            formulas::dim_mult_pair_heis_even(m, n, p[0], p[1])?
        }
        (Family::HeisEven, Some(p), true) => {
            let (m, n) = two("heis-even")?;
            let c = formulas::capable_heis_even_pair(m, n, p[0] + p[1])?;
            plain(FormulaValue::Bool(c), "even-center Heisenberg pair capability")
        }
        (Family::HeisOdd, pair, capable) => {
            ensure!(params.len() == 1, "heis-odd expects --params m");
            let m = params[0];
            match (pair, capable) {
                (None, false) => plain(FormulaValue::Dim(formulas::dim_mult_heis_odd(m)?.into()), formulas::SRC_HEIS_ODD),
                (None, true) => plain(FormulaValue::Bool(formulas::capable_heis_odd(m)?), "odd-center Heisenberg capability"),
                (Some(p), false) => {
                    ensure!(p[1] == p[0] + 1, "the odd-center pair formula covers ideals of dimension (k|k+1)");
                    formulas::dim_mult_pair_heis_odd(m, p[0])?
                }
                (Some(p), true) => {
                    let c = formulas::capable_heis_odd_pair(m, p[0] + p[1])?;
                    plain(FormulaValue::Bool(c), "odd-center Heisenberg pair capability")
                }
            }
        }
    })
}

pub fn oracle(ctx: &Ctx, a: &OracleArgs) -> Result<ExitCode> {
    ctx.emit(&oracle_result(a)?, text::formula)?;
    Ok(ExitCode::SUCCESS)
}

fn bounds(a: &ReportArgs) -> GridBounds {
    let mut b = if a.empty { GridBounds::empty() } else { GridBounds::default() };
    let set = |slot: &mut usize, v: Option<usize>| {
        if let Some(v) = v {
            *slot = v;
        }
    };
    set(&mut b.abelian_max, a.abelian_max);
    set(&mut b.heis_even_max, a.heis_even_max);
    set(&mut b.heis_odd_max, a.heis_odd_max);
    set(&mut b.derived_one_max_dim, a.derived_one_max_dim);
    set(&mut b.invariance_max_dim, a.invariance_max_dim);
    set(&mut b.trials, a.trials);
    set(&mut b.free_max_letters, a.free_max_letters);
    set(&mut b.free_max_degree, a.free_max_degree);
    b
}

pub fn report(ctx: &Ctx, a: &ReportArgs) -> Result<ExitCode> {
    let b = bounds(a);
    let over = b.beyond_envelope();
    if !over.is_empty() {
        if !a.allow_large {
            return Err(anyhow!(
                "bounds beyond the supported envelope: {} (pass --allow-large to run anyway)",
                over.join(", ")
            ));
        }
        eprintln!("warning: {} exceed the supported envelope; expect long runtimes and high memory use", over.join(", "));
    }
    let start = Instant::now();
    let r = build_report(&b)?;
    if ctx.verbose {
        eprintln!("report: {} checks in {:.2?}", r.summary.checks, start.elapsed());
        let mut by_source: BTreeMap<&str, usize> = BTreeMap::new();
        for d in &r.discrepancies {
            *by_source.entry(d.source.as_str()).or_default() += 1;
        }
        for (source, n) in by_source {
            eprintln!("  {n} discrepancies from {source}");
        }
    }
    ctx.emit(&r, text::report)?;
    Ok(if r.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
