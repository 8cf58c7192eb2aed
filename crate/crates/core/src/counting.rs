//! Closed-form and recursive tree counts, all in exact arithmetic.
//!
//! `T(n)` below is the number of labeled trees on `n` vertices, with the
//! convention `T(1) = 1`.

use serde::Serialize;

use crate::arith::{binomial, factorial, multinomial, power, ExactCount, ExactRational};
use crate::enumeration::enumerate_compositions;
use crate::error::{Error, Result};
use crate::tree::{Composition, DegreeSequence};

/// Number of trees on `n` vertices in which vertex 1 has degree `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegV1Count {
    pub n: usize,
    pub k: usize,
    pub count: ExactCount,
}

/// Trees on `1..=n` with degree vector `d`: `(n-2)! / Π (d_i - 1)!`.
pub fn count_trees_with_degrees(d: &DegreeSequence) -> ExactCount {
    let n = d.len();
    let denom: ExactCount = d.degrees().iter().map(|&di| factorial(di - 1)).product();
    factorial(n - 2)
        .div_exact(&denom)
        .expect("(n-2)!/Π(d_i-1)! is a multinomial coefficient")
}

/// `n^(n-2)`, and 1 for the single-vertex tree.
pub fn count_total_trees(n: usize) -> Result<ExactCount> {
    match n {
        0 => Err(Error::OutOfRange("n must be at least 1".into())),
        1 => Ok(ExactCount::one()),
        _ => Ok(power(n, n - 2)),
    }
}

fn check_deg_v1_args(n: usize, k: usize) -> Result<()> {
    if n < 2 || k == 0 || k > n - 1 {
        Err(Error::OutOfRange(format!(
            "need n >= 2 and 1 <= k <= n-1, got n={n}, k={k}"
        )))
    } else {
        Ok(())
    }
}

/// Trees on `n` vertices with `deg(1) = k`: `(n-1)^(n-1-k) · C(n-2, k-1)`.
pub fn count_trees_deg_v1(n: usize, k: usize) -> Result<ExactCount> {
    check_deg_v1_args(n, k)?;
    Ok(power(n - 1, n - 1 - k) * binomial(n - 2, k - 1)?)
}

/// The same count in the form `T(n-1) / (n-1)^(k-2) · C(n-2, k-1)`, which is
/// a fraction until reduced when `k < 2`.
pub fn count_trees_deg_v1_rational(n: usize, k: usize) -> Result<ExactRational> {
    check_deg_v1_args(n, k)?;
    let t = ExactRational::from_count(&count_total_trees(n - 1)?);
    let scale = ExactRational::pow_signed((n - 1) as u64, k as i64 - 2)?;
    let choose = ExactRational::from_count(&binomial(n - 2, k - 1)?);
    Ok(t / scale * choose)
}

/// All `k` at once; the counts sum to `T(n)`.
pub fn deg_v1_distribution(n: usize) -> Result<Vec<DegV1Count>> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("need n >= 2, got {n}")));
    }
    (1..n)
        .map(|k| {
            Ok(DegV1Count {
                n,
                k,
                count: count_trees_deg_v1(n, k)?,
            })
        })
        .collect()
}

/// `Π a_i T(a_i) · m! / Π a_i!` where `m = Σ a_i`: the trees on `m + 1`
/// vertices whose components after deleting vertex 1 are the labeled groups
/// of sizes `a` (groups distinguishable, so not yet divided by `k!`).
fn fixed_composition_term(a: &[usize], t: impl Fn(usize) -> ExactCount) -> ExactCount {
    let weight: ExactCount = a.iter().map(|&ai| ExactCount::from(ai) * t(ai)).product();
    weight * multinomial(a)
}

fn require_positive(a: &Composition) -> Result<()> {
    if a.parts().contains(&0) {
        Err(Error::OutOfRange("component sizes must be positive".into()))
    } else {
        Ok(())
    }
}

/// `(Π a_i T(a_i)) · (n-1)! / Π a_i!` for a composition of `n - 1`.
pub fn count_fixed_composition_trees(n: usize, a: &Composition) -> Result<ExactCount> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("need n >= 2, got {n}")));
    }
    a.expect_sum(n - 1)?;
    require_positive(a)?;
    Ok(fixed_composition_term(a.parts(), |ai| {
        count_total_trees(ai).expect("ai >= 1")
    }))
}

fn ordered_fixed_composition_sum(m: usize, k: usize) -> Result<ExactCount> {
    Ok(enumerate_compositions(m, k, false)?
        .map(|a| fixed_composition_term(a.parts(), |ai| count_total_trees(ai).expect("ai >= 1")))
        .sum())
}

/// Left side of the degree-of-vertex-1 identity, with `m = n - 1`:
///
/// `(Σ_a Π a_i T(a_i) · m!/Π a_i!) / k!`
///
/// summed over ordered positive compositions `a` of `m` into `k` parts. The
/// ordered sum counts each tree once per ordering of its `k` components.
pub fn lemma1_lhs(n: usize, k: usize) -> Result<ExactCount> {
    check_deg_v1_args(n, k)?;
    ordered_fixed_composition_sum(n - 1, k)?
        .div_exact(&factorial(k))
        .map_err(|e| Error::NonIntegralResult(format!("lemma1_lhs({n}, {k}): {e}")))
}

/// The same sum scaled by `m^(k-2)`, which is a count of trees on `m`
/// vertices with `k - 1` marked edges. For `k = 1` the scale is `1/m` and the
/// product is only integral after reduction.
pub fn premoreda_lhs(m: usize, k: usize) -> Result<ExactCount> {
    if m == 0 || k == 0 || k > m {
        return Err(Error::OutOfRange(format!(
            "need 1 <= k <= m, got m={m}, k={k}"
        )));
    }
    let value = ExactRational::from_count(&ordered_fixed_composition_sum(m, k)?)
        * ExactRational::pow_signed(m as u64, k as i64 - 2)?
        / ExactRational::from_count(&factorial(k));
    value.to_count().map_err(|_| {
        Error::NonIntegralResult(format!("premoreda_lhs({m}, {k}) evaluated to {value}"))
    })
}

/// The three factors of one summand of the component-side count for a
/// composition `a` of `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LhsFactors {
    /// `m! / Π a_i!`: ways to split the labels into the groups.
    pub partition: ExactCount,
    /// `Π T(a_i)`: a tree inside every group.
    pub inner_trees: ExactCount,
    /// `m^(k-2) Π a_i`: ways to join the groups into one tree.
    pub joinings: ExactCount,
}

impl LhsFactors {
    pub fn product(&self) -> ExactCount {
        &(&self.partition * &self.inner_trees) * &self.joinings
    }
}

/// Factors for one composition. The join factor is evaluated through its
/// multinomial expansion ([`expand_l3`]).
pub fn lhs_factors(a: &Composition) -> Result<LhsFactors> {
    require_positive(a)?;
    let m = a.target_sum();
    Ok(LhsFactors {
        partition: multinomial(a.parts()),
        inner_trees: a
            .parts()
            .iter()
            .map(|&ai| count_total_trees(ai))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .product(),
        joinings: expand_l3(a, m)?,
    })
}

/// Trees on `m` vertices with `k - 1` marked edges, counted from the
/// component side: `Σ_a partition · inner_trees · joinings / k!`.
pub fn component_side_count(m: usize, k: usize) -> Result<ExactCount> {
    if m == 0 || k == 0 || k > m {
        return Err(Error::OutOfRange(format!(
            "need 1 <= k <= m, got m={m}, k={k}"
        )));
    }
    let mut ordered = ExactCount::zero();
    for a in enumerate_compositions(m, k, false)? {
        ordered += lhs_factors(&a)?.product();
    }
    ordered.div_exact(&factorial(k))
}

/// Trees on `m` vertices with `k - 1` marked edges, counted from the tree
/// side: `T(m) · C(m-1, k-1)`.
pub fn marked_tree_count(m: usize, k: usize) -> Result<ExactCount> {
    if m == 0 || k == 0 || k > m {
        return Err(Error::OutOfRange(format!(
            "need 1 <= k <= m, got m={m}, k={k}"
        )));
    }
    Ok(count_total_trees(m)? * binomial(m - 1, k - 1)?)
}

/// `T(1..=n)` from the vertex-1 recursion alone, starting at `T(1) = 1`.
///
/// Row `k` of the inner sum, grouped by the size `a` of the last part,
/// satisfies `Q_k(s) = Σ_a C(s, a) · a T(a) · Q_{k-1}(s - a)` with
/// `Q_1(s) = s T(s)`. `Q_k(n-1)` is exactly the ordered-composition sum.
pub fn recursion_table(n: usize) -> Result<Vec<ExactCount>> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    // t[i] = T(i); t[0] unused
    let mut t = vec![ExactCount::zero(), ExactCount::one()];
    for target in 2..=n {
        let s = target - 1;
        let weight: Vec<ExactCount> = (0..=s)
            .map(|a| ExactCount::from(a) * t[a].clone())
            .collect();
        // row[j] = Q_k(j) for the current k
        let mut row: Vec<ExactCount> = weight.clone();
        row[0] = ExactCount::zero();
        let mut total = ExactCount::zero();
        for k in 1..=s {
            total += row[s].div_exact(&factorial(k)).map_err(|_| {
                Error::NonIntegralResult(format!(
                    "ordered sum for T({target}), k = {k}, is not divisible by {k}!"
                ))
            })?;
            if k == s {
                break;
            }
            let mut next = vec![ExactCount::zero(); s + 1];
            for (j, slot) in next.iter_mut().enumerate().skip(k + 1) {
                for a in 1..=j - k {
                    let prev = &row[j - a];
                    if prev.is_zero() {
                        continue;
                    }
                    *slot += binomial(j, a)? * &weight[a] * prev;
                }
            }
            row = next;
        }
        t.push(total);
    }
    t.truncate(n + 1);
    Ok(t.split_off(1))
}

/// `T(n)` from the recursion; never consults `n^(n-2)`.
pub fn recursion_t(n: usize) -> Result<ExactCount> {
    Ok(recursion_table(n)?.pop().expect("nonempty table"))
}

/// `Σ_c (k-2)!/Π c_i! · Π a_i^(c_i+1)` over nonnegative compositions `c` of
/// `k - 2`, which equals `m^(k-2) Π a_i`. Defined as 1 when `k = 1`.
pub fn expand_l3(a: &Composition, m: usize) -> Result<ExactCount> {
    a.expect_sum(m)?;
    require_positive(a)?;
    let k = a.len();
    if k == 1 {
        return Ok(ExactCount::one());
    }
    let mut total = ExactCount::zero();
    for c in enumerate_compositions(k - 2, k, true)? {
        let monomial: ExactCount = a
            .parts()
            .iter()
            .zip(c.parts())
            .map(|(&ai, &ci)| power(ai, ci + 1))
            .product();
        total += multinomial(c.parts()) * monomial;
    }
    Ok(total)
}

/// Ways to join `k` components of the given sizes into one tree where
/// component `i` has `d_i` outgoing edges, each attached to any of its `a_i`
/// vertices: `(k-2)!/Π(d_i-1)! · Π a_i^(d_i)`.
pub fn count_supervertex_trees(d: &DegreeSequence, sizes: &Composition) -> Result<ExactCount> {
    if d.len() != sizes.len() {
        return Err(Error::InvalidDegreeSequence(format!(
            "{} degrees for {} components",
            d.len(),
            sizes.len()
        )));
    }
    require_positive(sizes)?;
    let attachments: ExactCount = sizes
        .parts()
        .iter()
        .zip(d.degrees())
        .map(|(&ai, &di)| power(ai, di))
        .product();
    Ok(count_trees_with_degrees(d) * attachments)
}

/// `Σ_{j=0}^{n-2} C(n-2, j) (n-1)^(n-2-j)`, term by term.
pub fn binomial_collapse(n: usize) -> Result<ExactCount> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("need n >= 2, got {n}")));
    }
    let r = n - 2;
    (0..=r)
        .map(|j| Ok(binomial(r, j)? * power(n - 1, r - j)))
        .sum::<Result<ExactCount>>()
}
