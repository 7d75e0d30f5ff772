use clap::ValueEnum;

use findep::acceptance::{self, CriterionOutcome};
use findep::buildings::{count_buildings, count_buildings_oracle, BuildingCount, total_buildings, verify_identities, BuildingTable};
use findep::combinatorics::{alpha, alpha_runs, enumerate_dd, marginal_identities, peak_probs, q_fast, q_formula, RunComposition};
use findep::hardcore::{
    bounds_arithmetic, evaluate_reference, grid, independence_poly_brute, independence_poly_with, tree_hardcore,
    RemovalRule, REFERENCE_VALUES,
};
use findep::lattice::{sample_box, verify_range, BoxColoring};
use findep::measure::{check_k_dependence, renewal_series, single_color_prob, BinaryPattern};
use findep::report::{Check, Report};
use findep::sampler::{exact_law, insertion_law, sample_insertion, sample_rejection};
use findep::stats::sigma_text;
use findep::word::{fmt_rational, parse_rational};
use findep::{BigRational, Error, Result, SeededRng, SignWord, Word};

use crate::output::Outcome;
use crate::{Command, GlobalOpts};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Insertion,
    Rejection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Rule {
    Largest,
    Smallest,
}

impl From<Rule> for RemovalRule {
    fn from(r: Rule) -> Self {
        match r {
            Rule::Largest => RemovalRule::Largest,
            Rule::Smallest => RemovalRule::Smallest,
        }
    }
}

/// Largest `q^n` that `totals --verify` will enumerate.
const MAX_TOTALS_WORDS: u64 = 1_000_000;
const MAX_SAMPLES: usize = 100_000;
const MAX_TREES: usize = 10_000;
/// The memo grows like `2^w` where `w` is the box's cross-section (the
/// product of all sides but the longest).
const MAX_CROSS_SECTION: usize = 24;

fn out_of_range(name: &'static str, reason: impl Into<String>) -> Error {
    Error::OutOfRange { name, reason: reason.into() }
}

fn parse_dims(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|part| {
            part.trim().parse::<usize>().map_err(|_| Error::Parse {
                what: "dimensions",
                input: text.to_string(),
            })
        })
        .collect()
}

fn parse_runs(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|part| {
            part.trim().parse::<usize>().map_err(|_| Error::Parse {
                what: "run lengths",
                input: text.to_string(),
            })
        })
        .collect()
}

fn parse_q(q: u32) -> Result<u8> {
    match u8::try_from(q) {
        Ok(q) if q >= 2 => Ok(q),
        _ => Err(Error::InvalidAlphabet(q)),
    }
}

/// Reads a word whose alphabet is either given or the largest symbol used.
fn parse_word_infer(text: &str, q: Option<u8>) -> Result<Word> {
    match q {
        Some(q) => {
            parse_q(q as u32)?;
            Word::parse(q, text)
        }
        None => {
            let loose = Word::parse(u8::MAX, text)?;
            let q = loose.symbols().iter().copied().max().unwrap_or(2).max(2);
            Word::new(q, loose.into_symbols())
        }
    }
}

fn dims_label(dims: &[usize]) -> String {
    dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("x")
}

pub fn run(cmd: &Command, g: &GlobalOpts) -> Result<Outcome> {
    match cmd {
        Command::BuildCount { word, q, oracle } => build_count(word, *q, *oracle),
        Command::Totals { q, n, verify } => totals(*q, *n, *verify),
        Command::VerifyIdentities { q, max_len } => identities(*q, *max_len),
        Command::Cylinder { word, q, pattern } => cylinder(word.as_deref(), *q, pattern.as_deref()),
        Command::KDep { q, k, max_len } => k_dep(*q, *k, *max_len),
        Command::Sample { q, n, count, method } => sample(*q, *n, *count, *method, g.seed),
        Command::InsertionLaw { q, n } => law(*q, *n),
        Command::QFormula { word } => q_value("q-formula", word, q_formula),
        Command::QFast { word } => q_value("q-fast", word, q_fast),
        Command::Alpha { signs, runs } => alpha_cmd(signs.as_deref(), runs.as_deref()),
        Command::Dd { m, count_only } => dd(*m, *count_only),
        Command::Marginals { n } => marginals(*n),
        Command::Peaks { m } => peaks(*m),
        Command::Renewal { p, n } => renewal(p, *n),
        Command::IndepPoly { dims, lambda, rule, brute } => indep_poly(dims, lambda, *rule, *brute),
        Command::PhWitness { quick } => ph_witness(*quick),
        Command::TreeHardcore { delta, depth, trees } => tree(*delta, *depth, *trees, g.seed),
        Command::BoxColor { dims, m, csv } => box_color(dims, *m, *csv, g.seed),
        Command::AcceptanceSuite { only } => acceptance_suite(only.as_deref()),
    }
}

/// Longest word sent through the memoized deletion recursion; its state
/// space grows exponentially with the length.
const MAX_RECURSION_LEN: usize = 16;

/// `B(x)` does not depend on the alphabet, so any word over at most four
/// colors can use the cubic recurrence.
fn buildings_of(x: &Word) -> Result<BuildingCount> {
    if x.len() <= MAX_RECURSION_LEN {
        return Ok(count_buildings(x));
    }
    if x.symbols().iter().all(|&s| s <= 4) {
        let v = q_fast(&Word::new(4, x.symbols().to_vec())?)?;
        let v = v.to_biguint().expect("building counts are nonnegative");
        return Ok(BuildingCount(v));
    }
    Err(Error::CapExceeded { len: x.len(), cap: MAX_RECURSION_LEN })
}

fn build_count(text: &str, q: Option<u8>, oracle: bool) -> Result<Outcome> {
    let x = parse_word_infer(text, q)?;
    let b = buildings_of(&x)?;
    let mut r = Report::new("build-count");
    r.input("word", &x).input("q", x.q());
    r.result("buildings", &b);
    if oracle {
        let brute = count_buildings_oracle(&x)?;
        let mut c = Check::new("recursion matches enumeration of arrival orders");
        c.record(brute == b, || format!("{b} != {brute}"));
        r.checks([c]);
    }
    Ok(Outcome::new(r))
}

fn totals(q: u32, n: usize, verify: bool) -> Result<Outcome> {
    let q8 = parse_q(q)?;
    let total = total_buildings(q, n);
    let mut r = Report::new("totals");
    r.input("q", q).input("n", n);
    r.result("total", &total);
    if verify {
        let words = (q as u64).checked_pow(n as u32).filter(|&w| w <= MAX_TOTALS_WORDS);
        if words.is_none() {
            return Err(out_of_range("n", format!("q^n must be <= {MAX_TOTALS_WORDS} for --verify")));
        }
        let mut table = BuildingTable::new();
        let sum = Word::all(q8, n).fold(findep::BigUint::from(0u8), |acc, x| acc + table.count(x.symbols()));
        let mut c = Check::new("sum of B over all words");
        c.record(&sum == total.value(), || format!("{sum} != {total}"));
        r.checks([c]);
    }
    Ok(Outcome::new(r))
}

fn identities(q: u8, max_len: usize) -> Result<Outcome> {
    let checks = verify_identities(q, max_len)?;
    let mut r = Report::new("verify-identities");
    r.input("q", q).input("max_len", max_len);
    r.result("identities", checks.len());
    r.checks(checks);
    Ok(Outcome::new(r))
}

fn cylinder(word: Option<&str>, q: u8, pattern: Option<&str>) -> Result<Outcome> {
    parse_q(q as u32)?;
    let mut r = Report::new("cylinder");
    r.input("q", q);
    match (word, pattern) {
        (Some(w), None) => {
            let x = Word::parse(q, w)?;
            r.input("word", &x);
            let b = buildings_of(&x)?;
            let total = total_buildings(q as u32, x.len());
            let p = BigRational::new(b.value().clone().into(), total.value().clone().into());
            r.result("probability", fmt_rational(&p));
            r.result("buildings", b);
            r.result("total", total);
        }
        (None, Some(p)) => {
            let u: BinaryPattern = p.parse()?;
            r.input("pattern", &u);
            r.result("probability", fmt_rational(&single_color_prob(q, &u)?));
        }
        _ => return Err(out_of_range("word", "give exactly one of a word or --pattern")),
    }
    Ok(Outcome::new(r))
}

fn k_dep(q: u8, k: usize, max_len: usize) -> Result<Outcome> {
    let dep = check_k_dependence(q, k, max_len)?;
    let mut r = Report::new("k-dep");
    r.input("q", q).input("k", k).input("max_len", max_len);
    r.result("dependent", if dep.passed { "holds" } else { "fails" });
    if let Some(w) = &dep.witness {
        r.result("u", &w.u).result("v", &w.v);
        r.result("joint", &w.joint).result("product", &w.product).result("gap", &w.gap);
    }
    r.checks([dep.to_check()]);
    Ok(Outcome::new(r))
}

fn sample(q: u8, n: usize, count: usize, method: Method, seed: u64) -> Result<Outcome> {
    if count > MAX_SAMPLES {
        return Err(out_of_range("count", format!("must be <= {MAX_SAMPLES}")));
    }
    let rng = SeededRng::new(seed);
    let mut r = Report::new("sample");
    r.input("q", q).input("n", n).input("count", count);
    r.input("method", format!("{method:?}").to_lowercase()).input("seed", seed);
    let mut body = String::new();
    for i in 0..count {
        let mut draw = rng.substream(i as u64);
        let word = match method {
            Method::Insertion => sample_insertion(q, n, &mut draw)?,
            Method::Rejection => {
                let (w, attempts) = sample_rejection(q, n, &mut draw)?;
                r.result(format!("attempts_{i}"), attempts);
                w
            }
        };
        body.push_str(&format!("{word}\n"));
        r.result(format!("sample_{i}"), &word);
    }
    Ok(Outcome::new(r).with_body(body))
}

fn law(q: u8, n: usize) -> Result<Outcome> {
    let ins = insertion_law(q, n)?;
    let exact = exact_law(q, n)?;
    let mut r = Report::new("insertion-law");
    r.input("q", q).input("n", n);
    let mut body = String::new();
    for (w, p) in &ins {
        body.push_str(&format!("{w} {}\n", fmt_rational(p)));
        r.result(w.to_string(), fmt_rational(p));
    }
    let mut c = Check::new("insertion law equals cylinder law");
    for (w, p) in &exact {
        c.record(ins.get(w) == Some(p), || format!("differs at {w}"));
    }
    c.record(ins.len() == exact.len(), || format!("support sizes {} and {}", ins.len(), exact.len()));
    r.checks([c]);
    Ok(Outcome::new(r).with_body(body))
}

fn q_value(name: &str, text: &str, f: fn(&Word) -> Result<findep::BigInt>) -> Result<Outcome> {
    let x = Word::parse(4, text)?;
    let v = f(&x)?;
    let mut r = Report::new(name);
    r.input("word", &x);
    r.result("value", v);
    Ok(Outcome::new(r))
}

fn alpha_cmd(signs: Option<&str>, runs: Option<&str>) -> Result<Outcome> {
    let mut r = Report::new("alpha");
    let (y, comp) = match (signs, runs) {
        (Some(s), None) => {
            let y: SignWord = s.parse()?;
            r.input("signs", &y);
            let comp = RunComposition(y.runs());
            (y, comp)
        }
        (None, Some(text)) => {
            let comp = RunComposition(parse_runs(text)?);
            r.input("runs", text.trim());
            (comp.to_sign_word(), comp)
        }
        _ => return Err(out_of_range("signs", "give exactly one of a sign word or --runs")),
    };
    let by_dp = alpha(&y);
    let by_runs = alpha_runs(&comp);
    r.result("alpha", &by_dp);
    let mut c = Check::new("descent DP matches run recursion");
    c.record(by_dp == by_runs, || format!("{by_dp} != {by_runs}"));
    r.checks([c]);
    Ok(Outcome::new(r))
}

fn dd(m: usize, count_only: bool) -> Result<Outcome> {
    let words = enumerate_dd(m)?;
    let mut r = Report::new("dd");
    r.input("m", m);
    r.result("count", words.len());
    if count_only {
        return Ok(Outcome::new(r));
    }
    let listed: Vec<String> = words.iter().map(|w| w.to_string()).collect();
    r.result("words", listed.join(" "));
    let mut body = String::new();
    for w in &listed {
        body.push_str(&format!("{w}\n"));
    }
    Ok(Outcome::new(r).with_body(body))
}

fn marginals(n: usize) -> Result<Outcome> {
    let checks = marginal_identities(n)?;
    let mut r = Report::new("marginals");
    r.input("n", n);
    r.result("identities", checks.len());
    r.checks(checks);
    Ok(Outcome::new(r))
}

fn peaks(m: usize) -> Result<Outcome> {
    if m > 200 {
        return Err(out_of_range("m", "must be <= 200"));
    }
    let mut r = Report::new("peaks");
    r.input("m", m);
    let mut body = String::new();
    for (i, q) in peak_probs(m).iter().enumerate() {
        body.push_str(&format!("q_{i}: {}\n", fmt_rational(q)));
        r.result(format!("q_{i}"), fmt_rational(q));
    }
    Ok(Outcome::new(r).with_body(body))
}

fn renewal(p: &str, n: usize) -> Result<Outcome> {
    if n > 10_000 {
        return Err(out_of_range("n", "must be <= 10000"));
    }
    let p = parse_rational(p)?;
    let series = renewal_series(&p, n)?;
    let mut r = Report::new("renewal");
    r.input("p", fmt_rational(&p)).input("n", n);
    let mut body = String::new();
    for (i, g) in series.coefficients.iter().enumerate() {
        body.push_str(&format!("s^{i}: {}\n", fmt_rational(g)));
        r.result(format!("s^{i}"), fmt_rational(g));
    }
    match series.first_negative() {
        Some((i, v)) => r.result("first_negative", format!("s^{i}: {}", fmt_rational(&v))),
        None => r.result("first_negative", "none"),
    };
    Ok(Outcome::new(r).with_body(body))
}

fn indep_poly(dims: &str, lambda: &str, rule: Rule, brute: bool) -> Result<Outcome> {
    let dims = parse_dims(dims)?;
    let lambda = parse_rational(lambda)?;
    let mut sides = dims.clone();
    sides.sort_unstable();
    sides.pop();
    if sides.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d)).is_none_or(|w| w > MAX_CROSS_SECTION) {
        return Err(out_of_range(
            "dims",
            format!("cross-section (all sides but the longest) must be <= {MAX_CROSS_SECTION}"),
        ));
    }
    let g = grid(&dims)?;
    let all = g.all_vertices();
    let out = independence_poly_with(&g, &all, &lambda, rule.into())?;
    let mut r = Report::new("indep-poly");
    r.input("dims", dims_label(&dims)).input("lambda", fmt_rational(&lambda));
    r.input("rule", format!("{rule:?}").to_lowercase());
    r.result("value", fmt_rational(&out.value));
    r.result("vertices", g.len());
    r.result("memo_size", out.memo_size);
    if brute {
        let direct = independence_poly_brute(&g, &all, &lambda)?;
        let mut c = Check::new("recursion matches subset enumeration");
        c.record(direct == out.value, || fmt_rational(&direct));
        r.checks([c]);
    }
    Ok(Outcome::new(r))
}

fn ph_witness(quick: bool) -> Result<Outcome> {
    let mut r = Report::new("ph-witness");
    r.input("quick", quick);
    let mut checks = Vec::new();
    let mut negative = 0;
    let mut total = 0;
    for reference in REFERENCE_VALUES.iter().filter(|v| !quick || v.dims.len() < 3) {
        let w = evaluate_reference(reference)?;
        total += 1;
        if w.negative {
            negative += 1;
        }
        let label = format!("Z({}) at {}", dims_label(&w.dims), w.lambda);
        let mut c = Check::new(format!("{label} is negative and exact"));
        c.record(w.passed, || format!("got {} (memo {})", w.value, w.memo_size));
        checks.push(c.with_detail(format!("memo {}", w.memo_size)));
        r.result(label, &w.value);
    }
    r.results.insert(0, ("negative".into(), format!("{negative}/{total}")));
    for d in 1..=3 {
        let b = bounds_arithmetic(d)?;
        let mut line = format!(
            "lattice {} needs {}, tree {} needs {}",
            b.lattice_bound, b.lattice_min_colors, b.tree_bound, b.tree_min_colors
        );
        if let (Some(p), Some(k)) = (&b.witness_p, b.witness_min_colors) {
            line.push_str(&format!(", witness p {p} needs {k}"));
        }
        r.result(format!("colors d={d}"), line);
    }
    r.checks(checks);
    Ok(Outcome::new(r))
}

fn tree(delta: u32, depth: usize, trees: usize, seed: u64) -> Result<Outcome> {
    if trees == 0 || trees > MAX_TREES {
        return Err(out_of_range("trees", format!("must be in 1..={MAX_TREES}")));
    }
    let rng = SeededRng::new(seed);
    let mut r = Report::new("tree-hardcore");
    r.input("delta", delta).input("depth", depth).input("trees", trees).input("seed", seed);
    let mut occupied = 0u64;
    let mut vertices = 0u64;
    let mut root = 0u64;
    let mut marginal = None;
    let mut c = Check::new("occupied set is independent");
    for i in 0..trees {
        let t = tree_hardcore(delta, depth, &mut rng.substream(i as u64))?;
        c.record(t.is_independent(), || format!("tree {i}"));
        occupied += t.occupied_count() as u64;
        vertices += t.occupied.len() as u64;
        root += t.occupied[0] as u64;
        marginal = Some(t.marginal);
    }
    let p = marginal.expect("at least one tree");
    r.result("occupied", format!("{occupied}/{vertices}"));
    r.result("marginal", fmt_rational(&p));
    r.result("deviation_sigmas", sigma_text(occupied, vertices, &p));
    r.result("root_occupied", format!("{root}/{trees}"));
    r.checks([c]);
    Ok(Outcome::new(r))
}

fn grid_text(c: &BoxColoring) -> String {
    let width = (c.palette_size() - 1).to_string().len();
    let cell = |v: usize| format!("{:>width$}", c.packed(v));
    let mut out = String::new();
    match c.dims.len() {
        1 => {
            let row: Vec<String> = (0..c.len()).map(cell).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        _ => {
            // rows of the last coordinate; higher-dimensional boxes are
            // printed as a sequence of 2D slices
            let cols = c.dims[c.dims.len() - 1];
            let rows = c.dims[c.dims.len() - 2];
            for (s, slice) in (0..c.len()).step_by(rows * cols).enumerate() {
                if c.dims.len() > 2 {
                    let coords = c.coordinates(slice);
                    let prefix: Vec<String> = coords[..c.dims.len() - 2].iter().map(|x| x.to_string()).collect();
                    if s > 0 {
                        out.push('\n');
                    }
                    out.push_str(&format!("slice {}\n", prefix.join(",")));
                }
                for row in 0..rows {
                    let start = slice + row * cols;
                    let line: Vec<String> = (start..start + cols).map(cell).collect();
                    out.push_str(&line.join(" "));
                    out.push('\n');
                }
            }
        }
    }
    out
}

fn box_color(dims: &str, m: usize, csv: bool, seed: u64) -> Result<Outcome> {
    let dims = parse_dims(dims)?;
    let coloring = sample_box(m, &dims, &SeededRng::new(seed))?;
    let mut r = Report::new("box-color");
    r.input("dims", dims_label(&dims)).input("m", m).input("seed", seed);
    r.result("palette", coloring.palette_size());
    r.result("directions", coloring.directions.len());
    let mut c = Check::new(format!("vertices within distance {m} differ"));
    c.record(verify_range(&coloring, m), || "collision found".into());
    r.checks([c]);
    let body = if csv { coloring.to_csv() } else { grid_text(&coloring) };
    let packed: Vec<u64> = (0..coloring.len()).map(|v| coloring.packed(v)).collect();
    let data = serde_json::json!({
        "dims": coloring.dims,
        "directions": coloring.directions,
        "packed": packed,
        "colors": coloring.colors,
    });
    Ok(Outcome::new(r).with_body(body).with_data(data))
}

fn criterion_check(o: &CriterionOutcome) -> Check {
    let mut c = Check::new(format!("criterion {}: {}", o.id, o.title));
    c.cases = o.checks.iter().map(|k| k.cases).sum();
    c.passed = o.passed;
    if let Some(e) = &o.error {
        c.detail = e.clone();
    } else if let Some(k) = o.checks.iter().find(|k| !k.passed) {
        c.detail = format!("{}: {}", k.name, k.detail);
    }
    c
}

fn acceptance_suite(only: Option<&str>) -> Result<Outcome> {
    let outcomes = match only {
        None => acceptance::run_all(),
        Some(list) => {
            let mut out = Vec::new();
            for part in list.split(',') {
                let id: u8 = part.trim().parse().map_err(|_| Error::Parse {
                    what: "criterion list",
                    input: list.to_string(),
                })?;
                let c = acceptance::criterion(id)
                    .ok_or_else(|| out_of_range("only", format!("no criterion {id}")))?;
                out.push(c.run());
            }
            out
        }
    };
    let mut r = Report::new("acceptance-suite");
    if let Some(list) = only {
        r.input("only", list);
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    r.result("passed", format!("{passed}/{}", outcomes.len()));
    r.checks(outcomes.iter().map(criterion_check));
    Ok(Outcome::new(r))
}
