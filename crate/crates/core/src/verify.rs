//! Cross-checks between the independent computations: matrix iteration,
//! closed forms, characteristic polynomials, eigenvectors and brute force.
//!
//! Each suite returns a report of named checks; a failing check carries the
//! first counterexample found.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::closed_form::{closed_form_vector, lemma1_sides};
use crate::error::Result;
use crate::exact::{poly_determinant_charpoly, CountVector, IntPolynomial};
use crate::oracle::{
    connected_histogram, dissection_histogram, enumerate_connected, enumerate_dissections,
    enumerate_noncrossing_graphs, enumerate_partitions, enumerate_spanning_structures,
    first_duplicate, geometric_histogram, matching_isolation_conventions, partition_histogram, relation_histogram, EnumOptions,
    RootConvention, SpanningKind,
};
use crate::production::{count_sequence, k_angulation_total, GraphClass, GraphClassSpec};
use crate::spectral::{
    charpoly_recurrence, class_charpoly, dominant_eigenvalue_with_precision,
    eigenvector_from_charpoly, real_roots, CharPolyMethod, Precision,
};

/// Reference data: root-degree vectors and characteristic polynomials
/// (coefficients low to high, `n = 1..=6`).
pub mod golden {
    pub const GEOMETRIC_VECTORS: &[(usize, &[u64])] = &[
        (3, &[4, 4]),
        (4, &[24, 16, 8]),
        (5, &[176, 112, 48, 16]),
    ];
    pub const CONNECTED_VECTORS: &[(usize, &[u64])] =
        &[(3, &[3, 1]), (4, &[16, 6, 1]), (5, &[105, 41, 9, 1])];
    pub const PARTITION_VECTORS: &[(usize, &[u64])] = &[(3, &[2, 2, 0, 1]), (4, &[6, 4, 3, 0, 1])];

    pub const GEOMETRIC_CHARPOLYS: [&[i64]; 6] = [
        &[2, -1],
        &[-4, -4, 1],
        &[8, 4, 6, -1],
        &[-16, 0, 0, -8, 1],
        &[32, -16, -16, -8, 10, -1],
        &[-64, 64, 48, 32, 20, -12, 1],
    ];
    pub const CONNECTED_CHARPOLYS: [&[i64]; 6] = [
        &[3, -1],
        &[2, -6, 1],
        &[0, -13, 9, -1],
        &[0, -12, 33, -12, 1],
        &[0, -4, 63, -62, 15, -1],
        &[0, 0, 66, -180, 100, -18, 1],
    ];
    pub const PARTITION_CHARPOLYS: [&[i64]; 6] = [
        &[0, -1],
        &[-1, 0, 1],
        &[2, 2, 0, -1],
        &[-3, -4, -3, 0, 1],
        &[4, 5, 6, 4, 0, -1],
        &[-5, -4, -6, -8, -5, 0, 1],
    ];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Vectors,
    Charpoly,
    Eigen,
    Oracle,
    Lemma1,
    Relation,
}

impl Suite {
    pub const ALL: [Self; 6] = [
        Self::Vectors,
        Self::Charpoly,
        Self::Eigen,
        Self::Oracle,
        Self::Lemma1,
        Self::Relation,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Self::Vectors => "vectors",
            Self::Charpoly => "charpoly",
            Self::Eigen => "eigen",
            Self::Oracle => "oracle",
            Self::Lemma1 => "lemma1",
            Self::Relation => "relation",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Size limits for a suite run. `None` picks the suite's default.
#[derive(Clone, Debug, Default)]
pub struct Limits {
    pub n_max: Option<usize>,
    /// Bound on `t, m, n` for the summation identity.
    pub max: Option<usize>,
    pub enumeration: EnumOptions,
    pub precision: Option<Precision>,
}

impl Limits {
    pub fn with_n_max(n_max: usize) -> Self {
        Self {
            n_max: Some(n_max),
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Summary on success, first counterexample on failure.
    pub detail: String,
}

impl Check {
    fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: false,
            detail: detail.into(),
        }
    }

    fn from_first_failure(name: impl Into<String>, ok: impl Into<String>, failure: Option<String>) -> Self {
        match failure {
            None => Self::pass(name, ok),
            Some(f) => Self::fail(name, f),
        }
    }

    fn from_result(name: &str, r: Result<Check>) -> Self {
        r.unwrap_or_else(|e| Self::fail(name, format!("error: {e}")))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "[{}] {c}", self.suite.name())?;
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "[{}] {verdict}", self.suite.name())
    }
}

pub fn run_suite(suite: Suite, limits: &Limits) -> SuiteReport {
    let checks = match suite {
        Suite::Vectors => vectors_suite(limits.n_max.unwrap_or(12)),
        Suite::Charpoly => charpoly_suite(limits.n_max.unwrap_or(8)),
        Suite::Eigen => eigen_suite(
            limits.n_max.unwrap_or(6),
            limits.precision.unwrap_or_else(Precision::from_env),
        ),
        Suite::Oracle => oracle_suite(limits.n_max.unwrap_or(7), &limits.enumeration),
        Suite::Lemma1 => vec![lemma1_suite(limits.max.or(limits.n_max).unwrap_or(12) as i64)],
        Suite::Relation => relation_suite(limits.n_max.unwrap_or(10), &limits.enumeration),
    };
    SuiteReport { suite, checks }
}

/// The classes with closed forms, k-angulations for `k = 3, 4, 5`.
pub fn formula_classes() -> Vec<GraphClass> {
    vec![
        GraphClass::KAngulation { k: 3 },
        GraphClass::KAngulation { k: 4 },
        GraphClass::KAngulation { k: 5 },
        GraphClass::Geometric,
        GraphClass::Connected,
        GraphClass::NonCrossingPartition,
    ]
}

fn class_vectors(class: &GraphClass, n_max: usize) -> Result<Vec<CountVector>> {
    let spec = GraphClassSpec::new(class.clone())?;
    Ok(count_sequence(&spec, n_max)?.into_iter().map(|l| l.vector).collect())
}

fn vector_at(class: &GraphClass, level: usize) -> Result<CountVector> {
    Ok(class_vectors(class, level)?.pop().expect("at least one level"))
}

/// Matrix iteration against the reference vectors.
pub fn golden_vectors_check() -> Check {
    let name = "golden vectors";
    Check::from_result(
        name,
        (|| {
            let sets = [
                (GraphClass::Geometric, golden::GEOMETRIC_VECTORS),
                (GraphClass::Connected, golden::CONNECTED_VECTORS),
                (GraphClass::NonCrossingPartition, golden::PARTITION_VECTORS),
            ];
            let mut compared = 0;
            for (class, vectors) in sets {
                for &(level, entries) in vectors {
                    let want = CountVector::from_u64s(level, entries);
                    let got = vector_at(&class, level)?;
                    if got != want {
                        return Ok(Check::fail(
                            name,
                            format!("{class} level {level}: matrix {got}, expected {want}"),
                        ));
                    }
                    compared += 1;
                }
            }
            Ok(Check::pass(name, format!("{compared} vectors exact")))
        })(),
    )
}

fn vectors_suite(n_max: usize) -> Vec<Check> {
    let mut checks = vec![golden_vectors_check()];
    for class in formula_classes() {
        let name = format!("closed form = matrix, {class}, levels <= {n_max}");
        checks.push(Check::from_result(
            &name,
            (|| {
                let vs = class_vectors(&class, n_max)?;
                let failure = vs.iter().find_map(|v| {
                    let cf = closed_form_vector(&class, v.level()).expect("closed form exists");
                    (cf != *v).then(|| format!("level {}: matrix {v}, closed form {cf}", v.level()))
                });
                Ok(Check::from_first_failure(
                    name.clone(),
                    format!("{} levels exact", vs.len()),
                    failure,
                ))
            })(),
        ));
    }
    checks.push(nonnegativity_check(n_max));
    checks
}

/// Every iterated vector is non-negative and zero past the reachable degree.
pub fn nonnegativity_check(n_max: usize) -> Check {
    let name = format!("count vectors non-negative, levels <= {n_max}");
    Check::from_result(
        &name,
        (|| {
            let mut classes = formula_classes();
            let connected: Vec<BigInt> = class_vectors(&GraphClass::Connected, n_max.max(2))?
                .iter()
                .map(CountVector::total)
                .collect();
            classes.push(GraphClass::Relation { counts: connected });
            for class in &classes {
                for v in class_vectors(class, n_max)? {
                    if !v.is_nonnegative() {
                        return Ok(Check::fail(name.clone(), format!("{class} level {}: {v}", v.level())));
                    }
                }
            }
            Ok(Check::pass(name.clone(), format!("{} classes", classes.len())))
        })(),
    )
}

fn golden_polys(class: &GraphClass) -> Option<[&'static [i64]; 6]> {
    match class {
        GraphClass::Geometric => Some(golden::GEOMETRIC_CHARPOLYS),
        GraphClass::Connected => Some(golden::CONNECTED_CHARPOLYS),
        GraphClass::NonCrossingPartition => Some(golden::PARTITION_CHARPOLYS),
        _ => None,
    }
}

/// The 18 reference polynomials against all three methods.
pub fn golden_charpoly_check() -> Check {
    let name = "golden characteristic polynomials";
    Check::from_result(
        name,
        (|| {
            let mut compared = 0;
            for class in [GraphClass::Geometric, GraphClass::Connected, GraphClass::NonCrossingPartition] {
                let table = golden_polys(&class).expect("table exists");
                for (i, coeffs) in table.iter().enumerate() {
                    let want = IntPolynomial::from_i64s(coeffs);
                    for method in CharPolyMethod::ALL {
                        let got = class_charpoly(&class, i + 1, method)?;
                        if got != want {
                            return Ok(Check::fail(
                                name,
                                format!("{class} n={} {}: {got}, expected {want}", i + 1, method.name()),
                            ));
                        }
                    }
                    compared += 1;
                }
            }
            Ok(Check::pass(name, format!("{compared} polynomials, 3 methods each")))
        })(),
    )
}

fn charpoly_suite(n_max: usize) -> Vec<Check> {
    let mut checks = vec![golden_charpoly_check()];
    let mut classes = formula_classes();
    for class in &classes {
        let name = format!("recurrence = closed = determinant, {class}, n <= {n_max}");
        checks.push(Check::from_result(
            &name,
            (|| {
                for n in 0..=n_max {
                    let polys: Vec<_> = CharPolyMethod::ALL
                        .iter()
                        .map(|&m| class_charpoly(class, n, m))
                        .collect::<Result<_>>()?;
                    if polys.windows(2).any(|w| w[0] != w[1]) {
                        let shown: Vec<String> = polys.iter().map(ToString::to_string).collect();
                        return Ok(Check::fail(name.clone(), format!("n={n}: {}", shown.join(" | "))));
                    }
                }
                Ok(Check::pass(name.clone(), format!("{} sizes", n_max + 1)))
            })(),
        ));
    }
    let closed_max = n_max.max(20);
    for class in &classes {
        let name = format!("recurrence = closed, {class}, n <= {closed_max}");
        checks.push(Check::from_result(
            &name,
            (|| {
                let seq = charpoly_recurrence(&class.matrix(closed_max)?, closed_max)?;
                for (n, d) in seq.polys.iter().enumerate() {
                    let closed = class_charpoly(class, n, CharPolyMethod::Closed)?;
                    if &closed != d {
                        return Ok(Check::fail(name.clone(), format!("n={n}: {d} vs {closed}")));
                    }
                    let lead_ok = d.degree() == Some(n)
                        && d.leading().is_some_and(|l| *l == BigInt::from(if n % 2 == 0 { 1 } else { -1 }));
                    if !lead_ok {
                        return Ok(Check::fail(name.clone(), format!("n={n}: leading term of {d}")));
                    }
                }
                Ok(Check::pass(name.clone(), format!("{} sizes", closed_max + 1)))
            })(),
        ));
    }
    let connected = relation_source(n_max);
    classes.push(GraphClass::Relation { counts: connected });
    let relation = classes.last().expect("just pushed");
    let name = format!("recurrence = determinant, relation, n <= {n_max}");
    checks.push(Check::from_result(
        &name,
        (|| {
            let m = relation.matrix(n_max.max(1))?;
            let seq = charpoly_recurrence(&m, n_max.max(1))?;
            for n in 1..=n_max {
                let det = poly_determinant_charpoly(&m.truncate(n)?);
                if det != seq.polys[n] {
                    return Ok(Check::fail(name.clone(), format!("n={n}: {} vs {det}", seq.polys[n])));
                }
            }
            Ok(Check::pass(name.clone(), format!("{n_max} sizes")))
        })(),
    ));
    checks
}

/// Connected-graph totals `c_2, …, c_{n+1}` from the connected matrix.
fn relation_source(n: usize) -> Vec<BigInt> {
    class_vectors(&GraphClass::Connected, n.max(2) + 1)
        .expect("connected counts")
        .iter()
        .map(CountVector::total)
        .collect()
}

fn eigen_suite(n_max: usize, precision: Precision) -> Vec<Check> {
    let eps = precision.epsilon_f64();
    let bound = 1e3 * eps;
    let mut classes = formula_classes();
    classes.push(GraphClass::Relation {
        counts: relation_source(n_max),
    });
    let mut checks = Vec::new();
    for class in &classes {
        let name = format!("eigenvector residuals, {class}, n <= {n_max}");
        checks.push(Check::from_result(
            &name,
            (|| {
                let mut worst = 0f64;
                let mut roots = 0;
                for n in 1..=n_max {
                    let m = class.matrix(n)?;
                    let p = charpoly_recurrence(&m, n)?.polys.pop().expect("d_n");
                    for r in real_roots(&p, precision) {
                        let pair = eigenvector_from_charpoly(&m, &r.midpoint())?;
                        roots += 1;
                        worst = worst.max(pair.residual);
                        if !(pair.residual <= bound) {
                            return Ok(Check::fail(
                                name.clone(),
                                format!("n={n} λ≈{:.6}: residual {:e} > {bound:e}", r.to_f64(), pair.residual),
                            ));
                        }
                    }
                }
                Ok(Check::pass(
                    name.clone(),
                    format!("{roots} roots at {} bits, worst residual {worst:e}", precision.bits),
                ))
            })(),
        ));
    }
    checks.push(monotone_check(
        "dominant eigenvalue of K_r (k=3) increasing, below 4",
        &GraphClass::KAngulation { k: 3 },
        12,
        Some(4.0),
        precision,
    ));
    checks.push(monotone_check(
        "dominant eigenvalue of G_n increasing",
        &GraphClass::Geometric,
        12,
        None,
        precision,
    ));
    checks
}

fn monotone_check(name: &str, class: &GraphClass, n_max: usize, cap: Option<f64>, precision: Precision) -> Check {
    Check::from_result(
        name,
        (|| {
            let mut values = Vec::new();
            for n in 1..=n_max {
                let d = dominant_eigenvalue_with_precision(&class.matrix(n)?, precision)?;
                values.push(d.value().to_f64().unwrap_or(f64::NAN));
            }
            let increasing = values.windows(2).all(|w| w[0] < w[1]);
            let capped = cap.is_none_or(|c| values.iter().all(|&v| v < c));
            let shown: Vec<String> = values.iter().map(|v| format!("{v:.4}")).collect();
            Ok(if increasing && capped {
                Check::pass(name, shown.join(" < "))
            } else {
                Check::fail(name, shown.join(", "))
            })
        })(),
    )
}

fn histogram_check<F>(name: String, class: &GraphClass, levels: impl IntoIterator<Item = usize>, oracle: F) -> Check
where
    F: Fn(usize) -> Result<CountVector>,
{
    Check::from_result(
        &name,
        (|| {
            let mut count = 0;
            for level in levels {
                let want = vector_at(class, level)?;
                let got = oracle(level)?;
                if got != want {
                    return Ok(Check::fail(
                        name.clone(),
                        format!("level {level}: enumeration {got}, matrix {want}"),
                    ));
                }
                count += 1;
            }
            Ok(Check::pass(name.clone(), format!("{count} levels exact")))
        })(),
    )
}

fn oracle_suite(n_max: usize, opts: &EnumOptions) -> Vec<Check> {
    let part_max = n_max + 2;
    let poly_max = n_max + 5;
    let mut checks = vec![
        histogram_check(
            format!("visibility histogram = matrix, geometric, n <= {n_max}"),
            &GraphClass::Geometric,
            2..=n_max,
            |n| geometric_histogram(n, opts),
        ),
        histogram_check(
            format!("visibility histogram = matrix, connected, n <= {n_max}"),
            &GraphClass::Connected,
            2..=n_max,
            |n| connected_histogram(n, opts),
        ),
        histogram_check(
            format!("isolation histogram = matrix, partition, n <= {part_max}"),
            &GraphClass::NonCrossingPartition,
            1..=part_max,
            |n| partition_histogram(n, RootConvention::IncludeRoot, opts),
        ),
        histogram_check(
            format!("isolation histogram = matrix, relation, n <= {n_max}"),
            &GraphClass::Relation {
                counts: relation_source(n_max),
            },
            1..=n_max,
            |n| relation_histogram(n, RootConvention::IncludeRoot, opts),
        ),
    ];
    for k in 3..=5i64 {
        let r_max = (poly_max - 2) / (k as usize - 2);
        let class = GraphClass::KAngulation { k };
        checks.push(histogram_check(
            format!("root-degree histogram = matrix, {class}, polygon <= {poly_max}"),
            &class,
            1..=r_max,
            |r| dissection_histogram(k, r, opts),
        ));
        let name = format!("k-angulation totals = enumeration, k={k}, polygon <= {poly_max}");
        checks.push(Check::from_result(
            &name,
            (|| {
                for r in 1..=r_max {
                    let formula = k_angulation_total(k, r as i64)?;
                    let counted = BigInt::from(enumerate_dissections(k, r, opts)?.len());
                    if formula != counted {
                        return Ok(Check::fail(name.clone(), format!("r={r}: formula {formula}, enumeration {counted}")));
                    }
                }
                Ok(Check::pass(name.clone(), format!("{r_max} sizes")))
            })(),
        ));
    }
    checks.push(isolation_convention_check(opts));
    checks.push(duplicate_audit(n_max.min(6), opts));
    checks.push(determinism_check(n_max.min(7)));
    checks
}

/// Only the root-inclusive isolation degree reproduces the partition
/// matrix for `n <= 6`.
pub fn isolation_convention_check(opts: &EnumOptions) -> Check {
    let name = "isolation-degree convention matching the partition matrix, n <= 6";
    Check::from_result(
        name,
        (|| {
            let found = matching_isolation_conventions(6, opts, |n| {
                vector_at(&GraphClass::NonCrossingPartition, n)
            })?;
            Ok(if found == [RootConvention::IncludeRoot] {
                Check::pass(name, "root counted (default)")
            } else {
                Check::fail(name, format!("matching conventions: {found:?}"))
            })
        })(),
    )
}

/// Hash-set audit of every enumerator at `n`.
pub fn duplicate_audit(n: usize, opts: &EnumOptions) -> Check {
    let name = format!("enumerations duplicate-free, n <= {n}");
    Check::from_result(
        &name,
        (|| {
            for m in 1..=n {
                if let Some(g) = first_duplicate(enumerate_noncrossing_graphs(m, opts)?) {
                    return Ok(Check::fail(name.clone(), format!("graph {g} repeated")));
                }
                if let Some(g) = first_duplicate(enumerate_connected(m, opts)?) {
                    return Ok(Check::fail(name.clone(), format!("connected graph {g} repeated")));
                }
                if let Some(p) = first_duplicate(enumerate_partitions(m, opts)?) {
                    return Ok(Check::fail(name.clone(), format!("partition {p} repeated")));
                }
                for k in 3..=5 {
                    let r = m.min(4);
                    if let Some(d) = first_duplicate(enumerate_dissections(k, r, opts)?) {
                        return Ok(Check::fail(name.clone(), format!("dissection {d} repeated")));
                    }
                }
            }
            Ok(Check::pass(name.clone(), "no repeats"))
        })(),
    )
}

/// Histograms and enumeration order with one worker and with several.
pub fn determinism_check(n: usize) -> Check {
    let name = format!("parallel enumeration deterministic, n = {n}");
    Check::from_result(
        &name,
        (|| {
            let one = EnumOptions::with_workers(1);
            let many = EnumOptions::with_workers(4);
            let same_hist = geometric_histogram(n, &one)? == geometric_histogram(n, &many)?
                && relation_histogram(n, RootConvention::IncludeRoot, &one)?
                    == relation_histogram(n, RootConvention::IncludeRoot, &many)?;
            let same_order = enumerate_noncrossing_graphs(n.min(6), &one)?
                == enumerate_noncrossing_graphs(n.min(6), &many)?;
            Ok(if same_hist && same_order {
                Check::pass(name.clone(), "1 and 4 workers agree")
            } else {
                Check::fail(name.clone(), "1 and 4 workers disagree")
            })
        })(),
    )
}

fn lemma1_suite(max: i64) -> Check {
    let name = format!("summation identity, t, m, n <= {max}");
    let mut cases = 0;
    for t in 0..=max {
        for m in 0..=max {
            for n in 0..=max {
                let (l, r) = lemma1_sides(t, m, n);
                if l != r {
                    return Check::fail(name, format!("t={t} m={m} n={n}: {l} != {r}"));
                }
                cases += 1;
            }
        }
    }
    Check::pass(name, format!("{cases} cases"))
}

/// Totals of the relation matrix built from `counts`, for levels
/// `1..=n_max`.
pub fn relation_totals(counts: Vec<BigInt>, n_max: usize) -> Result<Vec<BigInt>> {
    let spec = GraphClassSpec::new(GraphClass::Relation { counts })?;
    Ok(count_sequence(&spec, n_max)?.into_iter().map(|l| l.total).collect())
}

fn relation_suite(n_max: usize, opts: &EnumOptions) -> Vec<Check> {
    let mut checks = Vec::new();
    let name = format!("relation(connected) totals = geometric totals, n <= {n_max}");
    checks.push(Check::from_result(
        &name,
        (|| {
            let r = relation_totals(relation_source(n_max), n_max)?;
            let g: Vec<BigInt> = class_vectors(&GraphClass::Geometric, n_max.max(2))?
                .iter()
                .map(CountVector::total)
                .collect();
            let failure = (2..=n_max).find_map(|n| {
                (r[n - 1] != g[n - 2]).then(|| format!("n={n}: relation {}, geometric {}", r[n - 1], g[n - 2]))
            });
            Ok(Check::from_first_failure(name.clone(), format!("{} levels", n_max.saturating_sub(1)), failure))
        })(),
    ));
    let spanning_max = n_max.min(7);
    for (source, target) in [
        (SpanningKind::Tree, SpanningKind::Forest),
        (SpanningKind::Path, SpanningKind::PathForest),
    ] {
        let name = format!(
            "relation({}) totals = {} counts, n <= {spanning_max}",
            source.name(),
            target.name()
        );
        checks.push(Check::from_result(
            &name,
            (|| {
                let counts = (2..=spanning_max.max(2))
                    .map(|i| enumerate_spanning_structures(i, source, opts))
                    .collect::<Result<Vec<_>>>()?;
                let totals = relation_totals(counts, spanning_max)?;
                for n in 1..=spanning_max {
                    let want = enumerate_spanning_structures(n, target, opts)?;
                    if totals[n - 1] != want {
                        return Ok(Check::fail(
                            name.clone(),
                            format!("n={n}: relation {}, enumeration {want}", totals[n - 1]),
                        ));
                    }
                }
                Ok(Check::pass(name.clone(), format!("{spanning_max} levels")))
            })(),
        ));
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_checks_pass() {
        assert!(golden_vectors_check().passed);
        let c = golden_charpoly_check();
        assert!(c.passed, "{c}");
    }

    #[test]
    fn small_suites_pass() {
        for suite in Suite::ALL {
            let limits = Limits {
                n_max: Some(5),
                max: Some(6),
                ..Limits::default()
            };
            let report = run_suite(suite, &limits);
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
