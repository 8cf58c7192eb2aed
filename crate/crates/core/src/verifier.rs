//! Formula-versus-oracle checks over parameter grids.
//!
//! Each check collects every mismatch in its grid instead of stopping at the
//! first, so a broken formula yields its full list of counterexamples.
//!
//! The formulas under test are reached through [`Formulas`], a table of plain
//! function pointers. [`Formulas::default`] is the real implementation;
//! [`Formulas::with_fault`] swaps in a deliberately wrong one for exercising
//! the failure path.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::arith::{binomial, factorial, power, ExactCount, ExactRational};
use crate::counting;
use crate::enumeration::{
    self, component_owner, enumerate_all_trees, enumerate_all_trees_by_edges,
    enumerate_compositions, enumerate_degree_sequences, enumerate_edge_subsets_pairs,
    enumerate_prufer_sequences, enumerate_supervertex_joinings, enumerate_trees_with_degrees,
    prufer_decode, visit_component_assemblies, N_CAP, N_CAP_EDGES, N_CAP_JOININGS, N_CAP_PAIRS,
};
use crate::error::{Error, Result};
use crate::tree::{Composition, DegreeSequence, Edge, LabeledTree, PruferSequence};

/// Largest `n` accepted by the lemma check; its left side sums over all
/// `2^(n-2)` compositions.
pub const LEMMA1_CAP: usize = 20;
/// Largest `n` for the formula-only checks.
pub const FORMULA_CAP: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum IdentityId {
    #[serde(rename = "THEOREM_1")]
    Theorem1,
    #[serde(rename = "DEG_V1_TOTALITY")]
    DegV1Totality,
    #[serde(rename = "LEMMA_1")]
    Lemma1,
    #[serde(rename = "EQ_20_RECURSION")]
    Eq20Recursion,
    #[serde(rename = "BINOMIAL_COLLAPSE")]
    BinomialCollapse,
    #[serde(rename = "DOUBLE_COUNT_PAIRS")]
    DoubleCountPairs,
    #[serde(rename = "L3_EXPANSION")]
    L3Expansion,
    #[serde(rename = "SUPERVERTEX_MARGINAL")]
    SupervertexMarginal,
    #[serde(rename = "PRUFER_ROUNDTRIP")]
    PruferRoundtrip,
}

impl IdentityId {
    pub const ALL: [IdentityId; 9] = [
        IdentityId::Theorem1,
        IdentityId::DegV1Totality,
        IdentityId::Lemma1,
        IdentityId::Eq20Recursion,
        IdentityId::BinomialCollapse,
        IdentityId::DoubleCountPairs,
        IdentityId::L3Expansion,
        IdentityId::SupervertexMarginal,
        IdentityId::PruferRoundtrip,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Theorem1 => "THEOREM_1",
            IdentityId::DegV1Totality => "DEG_V1_TOTALITY",
            IdentityId::Lemma1 => "LEMMA_1",
            IdentityId::Eq20Recursion => "EQ_20_RECURSION",
            IdentityId::BinomialCollapse => "BINOMIAL_COLLAPSE",
            IdentityId::DoubleCountPairs => "DOUBLE_COUNT_PAIRS",
            IdentityId::L3Expansion => "L3_EXPANSION",
            IdentityId::SupervertexMarginal => "SUPERVERTEX_MARGINAL",
            IdentityId::PruferRoundtrip => "PRUFER_ROUNDTRIP",
        }
    }

    /// The identity being checked, written out.
    pub fn formula(self) -> &'static str {
        match self {
            IdentityId::Theorem1 => "#trees with degrees d = (n-2)! / prod (d_i - 1)!",
            IdentityId::DegV1Totality => "sum_k #trees with deg(1) = k equals n^(n-2)",
            IdentityId::Lemma1 => {
                "sum_a (prod a_i T(a_i)) (n-1)!/prod a_i! / k! = T(n-1) / (n-1)^(k-2) * C(n-2, k-1)"
            }
            IdentityId::Eq20Recursion => {
                "T(n) = sum_k sum_a (prod a_i T(a_i)) (n-1)!/prod a_i! / k!, from T(1) = 1"
            }
            IdentityId::BinomialCollapse => "sum_j C(n-2, j) (n-1)^(n-2-j) = n^(n-2)",
            IdentityId::DoubleCountPairs => {
                "#(tree on m, k-1 marked edges) = T(m) C(m-1, k-1) = sum_a L1 L2 L3 / k!"
            }
            IdentityId::L3Expansion => {
                "m^(k-2) prod a_i = sum_c (k-2)!/prod c_i! prod a_i^(c_i + 1)"
            }
            IdentityId::SupervertexMarginal => {
                "sum_d (k-2)!/prod (d_i - 1)! prod a_i^(d_i) = m^(k-2) prod a_i"
            }
            IdentityId::PruferRoundtrip => "decode(encode(t)) = t and encode(decode(s)) = s",
        }
    }

    pub fn parse(s: &str) -> Option<IdentityId> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub params: String,
    pub expected: ExactCount,
    pub got: ExactCount,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity_id: IdentityId,
    pub status: Status,
    pub formula: &'static str,
    pub grid: String,
    pub checked: u64,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

struct Tally {
    id: IdentityId,
    grid: String,
    checked: u64,
    failures: Vec<Failure>,
    start: Instant,
}

impl Tally {
    fn new(id: IdentityId, grid: String) -> Self {
        Self {
            id,
            grid,
            checked: 0,
            failures: Vec::new(),
            start: Instant::now(),
        }
    }

    fn instance(&mut self) {
        self.checked += 1;
    }

    fn expect_eq(
        &mut self,
        params: impl FnOnce() -> String,
        expected: &ExactCount,
        got: &ExactCount,
    ) {
        if expected != got {
            self.failures.push(Failure {
                params: params(),
                expected: expected.clone(),
                got: got.clone(),
            });
        }
    }

    /// Records a failure when the formula itself errored.
    fn expect_ok(
        &mut self,
        params: impl FnOnce() -> String,
        expected: &ExactCount,
        got: Result<ExactCount>,
    ) {
        match got {
            Ok(g) => self.expect_eq(params, expected, &g),
            Err(e) => {
                let params = format!("{} ({e})", params());
                self.failures.push(Failure {
                    params,
                    expected: expected.clone(),
                    got: ExactCount::zero(),
                });
            }
        }
    }

    fn finish(self) -> IdentityReport {
        let status = if self.failures.is_empty() && self.checked > 0 {
            Status::Pass
        } else {
            Status::Fail
        };
        IdentityReport {
            identity_id: self.id,
            status,
            formula: self.id.formula(),
            grid: self.grid,
            checked: self.checked,
            failures: self.failures,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}

/// The formulas a [`Verifier`] checks against its oracles.
#[derive(Clone, Copy)]
pub struct Formulas {
    pub trees_with_degrees: fn(&DegreeSequence) -> ExactCount,
    pub total_trees: fn(usize) -> Result<ExactCount>,
    pub deg_v1: fn(usize, usize) -> Result<ExactCount>,
    pub deg_v1_rational: fn(usize, usize) -> Result<ExactRational>,
    pub lemma1_lhs: fn(usize, usize) -> Result<ExactCount>,
    pub premoreda_lhs: fn(usize, usize) -> Result<ExactCount>,
    pub marked_tree_count: fn(usize, usize) -> Result<ExactCount>,
    pub component_side_count: fn(usize, usize) -> Result<ExactCount>,
    pub recursion_table: fn(usize) -> Result<Vec<ExactCount>>,
    pub binomial_collapse: fn(usize) -> Result<ExactCount>,
    pub expand_l3: fn(&Composition, usize) -> Result<ExactCount>,
    pub supervertex_trees: fn(&DegreeSequence, &Composition) -> Result<ExactCount>,
    pub prufer_encode: fn(&LabeledTree) -> Result<PruferSequence>,
}

impl Default for Formulas {
    fn default() -> Self {
        Self {
            trees_with_degrees: counting::count_trees_with_degrees,
            total_trees: counting::count_total_trees,
            deg_v1: counting::count_trees_deg_v1,
            deg_v1_rational: counting::count_trees_deg_v1_rational,
            lemma1_lhs: counting::lemma1_lhs,
            premoreda_lhs: counting::premoreda_lhs,
            marked_tree_count: counting::marked_tree_count,
            component_side_count: counting::component_side_count,
            recursion_table: counting::recursion_table,
            binomial_collapse: counting::binomial_collapse,
            expand_l3: counting::expand_l3,
            supervertex_trees: counting::count_supervertex_trees,
            prufer_encode: enumeration::prufer_encode,
        }
    }
}

impl fmt::Debug for Formulas {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Formulas").finish_non_exhaustive()
    }
}

mod faults {
    //! Deliberately wrong formulas: each is off by one on part of its domain.
    use super::*;

    pub fn trees_with_degrees(d: &DegreeSequence) -> ExactCount {
        let c = counting::count_trees_with_degrees(d);
        if d.degrees()[0] == 2 {
            c + ExactCount::one()
        } else {
            c
        }
    }

    pub fn deg_v1(n: usize, k: usize) -> Result<ExactCount> {
        let c = counting::count_trees_deg_v1(n, k)?;
        Ok(if n >= 4 && k == 2 {
            c + ExactCount::one()
        } else {
            c
        })
    }

    pub fn lemma1_lhs(n: usize, k: usize) -> Result<ExactCount> {
        let c = counting::lemma1_lhs(n, k)?;
        Ok(if n >= 4 && k == 1 {
            c + ExactCount::one()
        } else {
            c
        })
    }

    pub fn recursion_table(n: usize) -> Result<Vec<ExactCount>> {
        let mut t = counting::recursion_table(n)?;
        if let Some(last) = t.get_mut(3) {
            *last += ExactCount::one();
        }
        Ok(t)
    }

    pub fn binomial_collapse(n: usize) -> Result<ExactCount> {
        // drops the j = 0 term
        let r = n
            .checked_sub(2)
            .ok_or_else(|| Error::OutOfRange(format!("n = {n}")))?;
        (1..=r)
            .map(|j| Ok(binomial(r, j)? * power(n - 1, r - j)))
            .sum()
    }

    pub fn component_side_count(m: usize, k: usize) -> Result<ExactCount> {
        // forgets the k! correction
        Ok(counting::component_side_count(m, k)? * factorial(k))
    }

    pub fn expand_l3(a: &Composition, m: usize) -> Result<ExactCount> {
        let c = counting::expand_l3(a, m)?;
        Ok(if a.len() >= 3 {
            c + ExactCount::one()
        } else {
            c
        })
    }

    pub fn supervertex_trees(d: &DegreeSequence, sizes: &Composition) -> Result<ExactCount> {
        // attaches every edge to a single vertex per component
        Ok(counting::count_trees_with_degrees(d) * ExactCount::from(u64::from(sizes.len() < 2)))
    }

    pub fn prufer_encode(t: &LabeledTree) -> Result<PruferSequence> {
        let s = enumeration::prufer_encode(t)?;
        let mut symbols = s.symbols().to_vec();
        symbols.reverse();
        PruferSequence::new(s.n(), symbols)
    }
}

impl Formulas {
    /// Real formulas except for the one that `id` primarily checks.
    pub fn with_fault(id: IdentityId) -> Self {
        let mut f = Self::default();
        match id {
            IdentityId::Theorem1 => f.trees_with_degrees = faults::trees_with_degrees,
            IdentityId::DegV1Totality => f.deg_v1 = faults::deg_v1,
            IdentityId::Lemma1 => f.lemma1_lhs = faults::lemma1_lhs,
            IdentityId::Eq20Recursion => f.recursion_table = faults::recursion_table,
            IdentityId::BinomialCollapse => f.binomial_collapse = faults::binomial_collapse,
            IdentityId::DoubleCountPairs => f.component_side_count = faults::component_side_count,
            IdentityId::L3Expansion => f.expand_l3 = faults::expand_l3,
            IdentityId::SupervertexMarginal => f.supervertex_trees = faults::supervertex_trees,
            IdentityId::PruferRoundtrip => f.prufer_encode = faults::prufer_encode,
        }
        f
    }
}

/// Per-identity grid limits for [`verify_all`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Limits {
    pub theorem1: usize,
    pub deg_v1_totality: usize,
    pub lemma1: usize,
    pub recursion: usize,
    pub double_count: usize,
    pub l3_k_max: usize,
    pub l3_m_max: usize,
    pub prufer: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            theorem1: 7,
            deg_v1_totality: 30,
            lemma1: 8,
            recursion: 30,
            double_count: 6,
            l3_k_max: 5,
            l3_m_max: 10,
            prufer: 7,
        }
    }
}

impl Limits {
    /// Every size limit set to `max_n`; the part-count limit of the
    /// expansion checks stays at its default.
    pub fn uniform(max_n: usize) -> Self {
        Self {
            theorem1: max_n,
            deg_v1_totality: max_n,
            lemma1: max_n,
            recursion: max_n,
            double_count: max_n,
            l3_k_max: Self::default().l3_k_max,
            l3_m_max: max_n,
            prufer: max_n,
        }
    }
}

fn check_range(what: &'static str, value: usize, min: usize, cap: usize) -> Result<()> {
    if value < min {
        return Err(Error::OutOfRange(format!(
            "{what} = {value} is below {min}"
        )));
    }
    if value > cap {
        return Err(Error::CapExceeded {
            what,
            requested: value,
            cap,
        });
    }
    Ok(())
}

/// Runs checks against a [`Formulas`] table.
#[derive(Debug, Clone, Copy, Default)]
pub struct Verifier {
    pub formulas: Formulas,
}

impl Verifier {
    pub fn new(formulas: Formulas) -> Self {
        Self { formulas }
    }

    /// Degree-sequence formula against two enumerations: a filter over the
    /// full sweep and the Prüfer-multiset permutations.
    pub fn theorem1(&self, n_max: usize) -> Result<IdentityReport> {
        check_range("n_max", n_max, 2, N_CAP)?;
        let mut tally = Tally::new(
            IdentityId::Theorem1,
            format!("n in 2..={n_max}, every degree sequence"),
        );
        for n in 2..=n_max {
            let mut by_degrees: HashMap<Vec<usize>, u64> = HashMap::new();
            for t in enumerate_all_trees(n)? {
                *by_degrees.entry(t.degrees()).or_default() += 1;
            }
            for d in enumerate_degree_sequences(n)? {
                tally.instance();
                let filtered = ExactCount::from(by_degrees.get(d.degrees()).copied().unwrap_or(0));
                let mut generated = 0u64;
                let mut wrong_degrees = 0u64;
                for t in enumerate_trees_with_degrees(&d)? {
                    generated += 1;
                    if t.degrees() != d.degrees() {
                        wrong_degrees += 1;
                    }
                }
                let params = || format!("d = {:?}", d.degrees());
                tally.expect_eq(params, &filtered, &(self.formulas.trees_with_degrees)(&d));
                tally.expect_eq(
                    || format!("d = {:?} (multiset permutations)", d.degrees()),
                    &filtered,
                    &ExactCount::from(generated),
                );
                tally.expect_eq(
                    || format!("d = {:?} (trees with wrong degrees)", d.degrees()),
                    &ExactCount::zero(),
                    &ExactCount::from(wrong_degrees),
                );
            }
        }
        Ok(tally.finish())
    }

    /// Counts by degree of vertex 1 add up to the total.
    pub fn deg_v1_totality(&self, n_max: usize) -> Result<IdentityReport> {
        check_range("n_max", n_max, 2, FORMULA_CAP)?;
        let mut tally = Tally::new(IdentityId::DegV1Totality, format!("n in 2..={n_max}"));
        for n in 2..=n_max {
            tally.instance();
            let total = (self.formulas.total_trees)(n)?;
            let sum: Result<ExactCount> = (1..n).map(|k| (self.formulas.deg_v1)(n, k)).sum();
            tally.expect_ok(|| format!("n = {n}"), &total, sum);
        }
        Ok(tally.finish())
    }

    /// Four routes to the number of trees with `deg(1) = k`: the composition
    /// sum, the rational form, the integer form and, up to the enumeration
    /// cap, a brute-force count.
    pub fn lemma1(&self, n_max: usize) -> Result<IdentityReport> {
        check_range("n_max", n_max, 2, LEMMA1_CAP)?;
        let brute_max = n_max.min(N_CAP);
        let mut tally = Tally::new(
            IdentityId::Lemma1,
            format!("n in 2..={n_max}, k in 1..n; brute force for n <= {brute_max}"),
        );
        for n in 2..=n_max {
            let brute: Option<Vec<u64>> = (n <= N_CAP)
                .then(|| -> Result<Vec<u64>> {
                    let mut hist = vec![0u64; n];
                    for t in enumerate_all_trees(n)? {
                        hist[t.degree_of(1)?] += 1;
                    }
                    Ok(hist)
                })
                .transpose()?;
            for k in 1..n {
                tally.instance();
                let integer = (self.formulas.deg_v1)(n, k)?;
                let reference = match &brute {
                    Some(hist) => {
                        let b = ExactCount::from(hist[k]);
                        tally.expect_eq(
                            || format!("n = {n}, k = {k} (integer form)"),
                            &b,
                            &integer,
                        );
                        b
                    }
                    None => integer,
                };
                tally.expect_ok(
                    || format!("n = {n}, k = {k} (composition sum)"),
                    &reference,
                    (self.formulas.lemma1_lhs)(n, k),
                );
                tally.expect_ok(
                    || format!("n = {n}, k = {k} (rational form)"),
                    &reference,
                    (self.formulas.deg_v1_rational)(n, k).and_then(|r| r.to_count()),
                );
            }
        }
        Ok(tally.finish())
    }

    /// The recursion against the closed form, and the binomial sum against
    /// both.
    pub fn recursion_and_collapse(&self, n_max: usize) -> Result<[IdentityReport; 2]> {
        check_range("n_max", n_max, 2, FORMULA_CAP)?;
        let mut rec = Tally::new(IdentityId::Eq20Recursion, format!("n in 2..={n_max}"));
        let table = (self.formulas.recursion_table)(n_max)?;
        let mut col = Tally::new(IdentityId::BinomialCollapse, format!("n in 2..={n_max}"));
        for n in 2..=n_max {
            let closed = (self.formulas.total_trees)(n)?;
            rec.instance();
            rec.expect_eq(|| format!("n = {n}"), &closed, &table[n - 1]);
            col.instance();
            let collapsed = (self.formulas.binomial_collapse)(n);
            col.expect_ok(
                || format!("n = {n} (recursion)"),
                &table[n - 1],
                collapsed.clone(),
            );
            col.expect_ok(|| format!("n = {n}"), &closed, collapsed);
        }
        Ok([rec.finish(), col.finish()])
    }

    /// Both sides of the marked-edge double count: enumerated (tree, edge
    /// set) pairs, `T(m) C(m-1, k-1)`, the scaled composition sum, the
    /// factored component count, and an explicit component-first
    /// construction that must reach every pair exactly `k!` times.
    pub fn double_count(&self, m_max: usize) -> Result<IdentityReport> {
        check_range("m_max", m_max, 2, N_CAP_PAIRS)?;
        let mut tally = Tally::new(
            IdentityId::DoubleCountPairs,
            format!("m in 2..={m_max}, k in 1..=m"),
        );
        for m in 2..=m_max {
            for k in 1..=m {
                tally.instance();
                let mut pairs: HashSet<(u128, u128)> = HashSet::new();
                for (t, cut) in enumerate_edge_subsets_pairs(m, k)? {
                    pairs.insert(pair_key(&t, &cut));
                }
                let enumerated = ExactCount::from(pairs.len());
                let p = || format!("m = {m}, k = {k}");
                tally.expect_ok(
                    || format!("{} (T(m) C(m-1,k-1))", p()),
                    &enumerated,
                    (self.formulas.marked_tree_count)(m, k),
                );
                tally.expect_ok(
                    || format!("{} (scaled composition sum)", p()),
                    &enumerated,
                    (self.formulas.premoreda_lhs)(m, k),
                );
                tally.expect_ok(
                    || format!("{} (L1 L2 L3 / k!)", p()),
                    &enumerated,
                    (self.formulas.component_side_count)(m, k),
                );

                let mut multiplicity: HashMap<(u128, u128), u64> = HashMap::new();
                let constructions = visit_component_assemblies(m, k, |t, cut| {
                    *multiplicity.entry(pair_key(t, cut)).or_default() += 1;
                })?;
                let fact = factorial(k).to_u64().expect("k <= 6");
                let stray = multiplicity
                    .keys()
                    .filter(|key| !pairs.contains(key))
                    .count();
                let off = multiplicity.values().filter(|&&c| c != fact).count();
                tally.expect_eq(
                    || format!("{} (constructions / k!)", p()),
                    &enumerated,
                    &ExactCount::from(constructions / fact),
                );
                tally.expect_eq(
                    || format!("{} (distinct constructed pairs)", p()),
                    &enumerated,
                    &ExactCount::from(multiplicity.len()),
                );
                tally.expect_eq(
                    || format!("{} (pairs not reached exactly k! times)", p()),
                    &ExactCount::zero(),
                    &ExactCount::from(off + stray),
                );
            }
        }
        Ok(tally.finish())
    }

    /// Multinomial expansion of the join factor.
    pub fn l3_expansion(&self, k_max: usize, m_max: usize) -> Result<IdentityReport> {
        check_range("k_max", k_max, 2, FORMULA_CAP)?;
        check_range("m_max", m_max, 2, FORMULA_CAP)?;
        let mut tally = Tally::new(
            IdentityId::L3Expansion,
            format!("k in 2..={k_max}, m in k..={m_max}, every positive composition"),
        );
        for k in 2..=k_max {
            for m in k..=m_max {
                for a in enumerate_compositions(m, k, false)? {
                    tally.instance();
                    let direct = power(m, k - 2)
                        * a.parts()
                            .iter()
                            .map(|&ai| ExactCount::from(ai))
                            .product::<ExactCount>();
                    tally.expect_ok(
                        || format!("a = {:?}", a.parts()),
                        &direct,
                        (self.formulas.expand_l3)(&a, m),
                    );
                }
            }
        }
        Ok(tally.finish())
    }

    /// Super-vertex counts summed over all component degree vectors, and
    /// per degree vector against an enumeration of actual joinings.
    pub fn supervertex_marginal(&self, k_max: usize, m_max: usize) -> Result<IdentityReport> {
        check_range("k_max", k_max, 2, FORMULA_CAP)?;
        check_range("m_max", m_max, 2, FORMULA_CAP)?;
        let brute_max = m_max.min(N_CAP_JOININGS);
        let mut tally = Tally::new(
            IdentityId::SupervertexMarginal,
            format!("k in 2..={k_max}, m in k..={m_max}; joinings enumerated for m <= {brute_max}"),
        );
        for k in 2..=k_max {
            let degree_vectors: Vec<DegreeSequence> = enumerate_degree_sequences(k)?.collect();
            for m in k..=m_max {
                for a in enumerate_compositions(m, k, false)? {
                    tally.instance();
                    let params = || format!("a = {:?}", a.parts());
                    let mut sum = ExactCount::zero();
                    let mut per_degree = Vec::with_capacity(degree_vectors.len());
                    for d in &degree_vectors {
                        let c = (self.formulas.supervertex_trees)(d, &a);
                        if let Ok(c) = &c {
                            sum += c;
                        }
                        per_degree.push(c);
                    }
                    let l3 = (self.formulas.expand_l3)(&a, m)?;
                    tally.expect_eq(params, &l3, &sum);

                    if m <= brute_max {
                        let owner = component_owner(&a);
                        let mut hist: HashMap<Vec<usize>, u64> = HashMap::new();
                        for joining in enumerate_supervertex_joinings(&a)? {
                            let mut deg = vec![0usize; k];
                            for &(u, v) in &joining {
                                deg[owner[u]] += 1;
                                deg[owner[v]] += 1;
                            }
                            *hist.entry(deg).or_default() += 1;
                        }
                        for (d, got) in degree_vectors.iter().zip(per_degree) {
                            let expected =
                                ExactCount::from(hist.get(d.degrees()).copied().unwrap_or(0));
                            tally.expect_ok(
                                || format!("a = {:?}, d = {:?}", a.parts(), d.degrees()),
                                &expected,
                                got,
                            );
                        }
                    }
                }
            }
        }
        Ok(tally.finish())
    }

    /// Both compositions of the codec, plus the degree law
    /// `deg(i) = 1 + #occurrences of i`.
    pub fn prufer_roundtrip(&self, n_max: usize) -> Result<IdentityReport> {
        check_range("n_max", n_max, 2, N_CAP)?;
        let mut tally = Tally::new(
            IdentityId::PruferRoundtrip,
            format!("n in 2..={n_max}, all words and all trees"),
        );
        let encode = self.formulas.prufer_encode;
        for n in 2..=n_max {
            tally.instance();
            let (mut words, mut words_ok) = (0u64, 0u64);
            for s in enumerate_prufer_sequences(n)? {
                words += 1;
                let t = prufer_decode(&s);
                let degree_law = t
                    .degrees()
                    .iter()
                    .enumerate()
                    .all(|(i, &d)| d == 1 + s.occurrences(i + 1));
                if degree_law && encode(&t).is_ok_and(|back| back == s) {
                    words_ok += 1;
                }
            }
            tally.expect_eq(
                || format!("n = {n} (encode . decode)"),
                &ExactCount::from(words),
                &ExactCount::from(words_ok),
            );

            // trees from the codec-independent oracle where it is available
            let trees: Box<dyn Iterator<Item = LabeledTree>> = if n <= N_CAP_EDGES {
                Box::new(enumerate_all_trees_by_edges(n)?)
            } else {
                Box::new(enumerate_all_trees(n)?)
            };
            let (mut count, mut ok) = (0u64, 0u64);
            for t in trees {
                count += 1;
                if encode(&t).is_ok_and(|s| prufer_decode(&s) == t) {
                    ok += 1;
                }
            }
            tally.expect_eq(
                || format!("n = {n} (decode . encode)"),
                &ExactCount::from(count),
                &ExactCount::from(ok),
            );
        }
        Ok(tally.finish())
    }

    pub fn all(&self, limits: &Limits) -> Vec<(IdentityId, Result<IdentityReport>)> {
        let mut out = vec![
            (IdentityId::Theorem1, self.theorem1(limits.theorem1)),
            (
                IdentityId::DegV1Totality,
                self.deg_v1_totality(limits.deg_v1_totality),
            ),
            (IdentityId::Lemma1, self.lemma1(limits.lemma1)),
        ];
        match self.recursion_and_collapse(limits.recursion) {
            Ok([rec, col]) => {
                out.push((IdentityId::Eq20Recursion, Ok(rec)));
                out.push((IdentityId::BinomialCollapse, Ok(col)));
            }
            Err(e) => {
                out.push((IdentityId::Eq20Recursion, Err(e.clone())));
                out.push((IdentityId::BinomialCollapse, Err(e)));
            }
        }
        out.push((
            IdentityId::DoubleCountPairs,
            self.double_count(limits.double_count),
        ));
        out.push((
            IdentityId::L3Expansion,
            self.l3_expansion(limits.l3_k_max, limits.l3_m_max),
        ));
        out.push((
            IdentityId::SupervertexMarginal,
            self.supervertex_marginal(limits.l3_k_max, limits.l3_m_max),
        ));
        out.push((
            IdentityId::PruferRoundtrip,
            self.prufer_roundtrip(limits.prufer),
        ));
        out
    }
}

fn pair_key(t: &LabeledTree, cut: &[Edge]) -> (u128, u128) {
    let n = t.n();
    let cut_mask = cut.iter().fold(0u128, |acc, &(u, v)| {
        let before: usize = (1..u).map(|i| n - i).sum();
        acc | (1u128 << (before + v - u - 1))
    });
    (t.edge_mask().expect("n <= 16"), cut_mask)
}

pub fn verify_theorem1(n_max: usize) -> Result<IdentityReport> {
    Verifier::default().theorem1(n_max)
}

pub fn verify_lemma1(n_max: usize) -> Result<IdentityReport> {
    Verifier::default().lemma1(n_max)
}

pub fn verify_double_count(m_max: usize) -> Result<IdentityReport> {
    Verifier::default().double_count(m_max)
}

pub fn verify_recursion_and_collapse(n_max: usize) -> Result<[IdentityReport; 2]> {
    Verifier::default().recursion_and_collapse(n_max)
}

pub fn verify_all(limits: &Limits) -> Vec<(IdentityId, Result<IdentityReport>)> {
    Verifier::default().all(limits)
}
