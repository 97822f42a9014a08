//! Constructions that produce verified Stanley decompositions.
//!
//! Each routine here realizes one decomposition pattern: layered splitting
//! along a variable (Janet-style), complements of principal ideals, gcd
//! transfer between `I` and its gcd-free part, three-generator recursion,
//! and the saturated three-variable recursion. The recursive routines
//! return a [`ConstructionTrace`] whose steps record every rule applied,
//! so a run can be audited line by line.

use std::fmt;

use itertools::Itertools;

use crate::decomp::{verify, Slab, StanleyDecomposition, Target};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::text::ideal_text;

/// Hard cap on recursion steps; the potentials documented on each
/// recursion make this unreachable at desk scale.
pub const STEP_CAP: usize = 1_000_000;

/// Rule tags for trace steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    GcdReduce,
    JanetSplit,
    Lemma13Split,
    CiBase,
    SmallCase,
    Transfer,
    Extend,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Rule::GcdReduce => "gcd_reduce",
            Rule::JanetSplit => "janet_split",
            Rule::Lemma13Split => "lemma13_split",
            Rule::CiBase => "ci_base",
            Rule::SmallCase => "small_case",
            Rule::Transfer => "transfer",
            Rule::Extend => "extend",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: Rule,
    pub detail: String,
}

/// A decomposition together with the log of rules that produced it.
/// Re-running the producing construction on the same input reproduces the
/// trace and the result byte for byte.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub steps: Vec<TraceStep>,
    pub result: StanleyDecomposition,
}

impl ConstructionTrace {
    /// Line-oriented log: one `rule: detail` line per step.
    pub fn log(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            out.push_str(&format!("{}: {}\n", s.rule, s.detail));
        }
        out
    }
}

struct Tracer {
    steps: Vec<TraceStep>,
}

impl Tracer {
    fn new() -> Self {
        Tracer { steps: Vec::new() }
    }

    fn push(&mut self, rule: Rule, detail: String) -> Result<()> {
        if self.steps.len() >= STEP_CAP {
            return Err(Error::IterationCap(STEP_CAP));
        }
        self.steps.push(TraceStep { rule, detail });
        Ok(())
    }
}

fn shift(slabs: Vec<Slab>, v: &Monomial) -> Vec<Slab> {
    slabs
        .into_iter()
        .map(|s| Slab::new(s.origin.mul(v), s.free))
        .collect()
}

/// Slabs of the complement of `(v)` inside `K[active]`, in the ambient
/// ring of `v`. Nested-prefix scheme: a monomial outside `(v)` is grouped
/// by the first support variable of `v` whose exponent falls short, and by
/// that exponent's value. Every slab has dimension `|active| - 1`.
fn principal_complement_slabs(v: &Monomial, active: &[usize]) -> Vec<Slab> {
    debug_assert!(!v.is_identity());
    debug_assert!(v.support().iter().all(|j| active.contains(j)));
    let n = v.dim();
    let supp = v.support();
    let mut slabs = Vec::new();
    let mut prefix = Monomial::one(n);
    for &j in &supp {
        let free: Vec<usize> = active.iter().copied().filter(|&k| k != j).collect();
        for b in 0..v.exp(j) {
            let mut exps = prefix.exps().to_vec();
            exps[j] = b;
            slabs.push(Slab::new(Monomial::new(exps), free.clone()));
        }
        prefix = prefix.mul(&Monomial::var_pow(j, v.exp(j), n));
    }
    slabs
}

/// Stanley decomposition of `S/(v)` with every slab of dimension `n - 1`.
pub fn principal_complement(v: &Monomial) -> Result<StanleyDecomposition> {
    if v.is_identity() {
        return Err(Error::UnitIdeal);
    }
    let n = v.dim();
    let active: Vec<usize> = (0..n).collect();
    Ok(StanleyDecomposition::new(
        Target::Quotient(MonomialIdeal::principal(v.clone())),
        principal_complement_slabs(v, &active),
    ))
}

/// Splitting variable choice for the layered recursions: the caller's
/// order while it lasts, then the highest-index active variable that
/// actually appears in the ideal.
fn pick_split_var(ideal: &MonomialIdeal, active: &[usize], order: &[usize]) -> (usize, usize) {
    if let Some(&v) = order.first() {
        if active.contains(&v) {
            return (v, 1);
        }
    }
    let var = active
        .iter()
        .copied()
        .filter(|&j| ideal.deg_in(j) > 0)
        .max()
        .unwrap_or_else(|| *active.last().expect("active set is nonempty"));
    (var, 0)
}

/// Layer ideal within the full ambient ring: generators with
/// `deg_var <= j`, with the `var` coordinate zeroed.
fn layer(ideal: &MonomialIdeal, var: usize, j: u32) -> MonomialIdeal {
    let gens = ideal
        .gens()
        .iter()
        .filter(|u| u.exp(var) <= j)
        .map(|u| {
            let mut e = u.exps().to_vec();
            e[var] = 0;
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(ideal.dim(), gens).expect("dimensions agree")
}

/// Layered (Janet-style) recursion shared by the quotient and ideal
/// targets. `ideal` is supported inside `active`; returned slabs fix every
/// variable already split by the callers at zero, to be filled in.
fn janet_slabs(
    ideal: &MonomialIdeal,
    active: &[usize],
    order: &[usize],
    ideal_target: bool,
) -> Vec<Slab> {
    let full = Slab::new(Monomial::one(ideal.dim()), active.to_vec());
    if ideal.is_zero() {
        return if ideal_target { vec![] } else { vec![full] };
    }
    if ideal.is_unit() {
        return if ideal_target { vec![full] } else { vec![] };
    }
    let (var, used) = pick_split_var(ideal, active, order);
    let rest: Vec<usize> = active.iter().copied().filter(|&j| j != var).collect();
    let q = ideal.deg_in(var);
    let mut slabs = Vec::new();
    for j in 0..=q {
        let sub = janet_slabs(&layer(ideal, var, j), &rest, &order[used..], ideal_target);
        for s in sub {
            let mut exps = s.origin.exps().to_vec();
            exps[var] = j;
            let mut free = s.free;
            if j == q {
                free.insert(var);
            }
            slabs.push(Slab::new(Monomial::new(exps), free));
        }
    }
    slabs
}

/// Stanley decomposition of `S/I` by layered splitting; the minimum slab
/// dimension is at least `n - g(I)`. The zero ideal yields the single slab
/// `1*K[all]`.
pub fn janet_quotient(ideal: &MonomialIdeal) -> Result<StanleyDecomposition> {
    janet_quotient_with_order(ideal, &[])
}

/// [`janet_quotient`] with an explicit splitting order (variables are
/// split front to back, then the default rule takes over).
pub fn janet_quotient_with_order(
    ideal: &MonomialIdeal,
    order: &[usize],
) -> Result<StanleyDecomposition> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    check_order(ideal.dim(), order)?;
    let active: Vec<usize> = (0..ideal.dim()).collect();
    let slabs = janet_slabs(ideal, &active, order, false);
    Ok(StanleyDecomposition::new(
        Target::Quotient(ideal.clone()),
        slabs,
    ))
}

/// Stanley decomposition of `I` itself by the same layered splitting.
/// Used as the general-position fallback and inside the two-variable case
/// of [`small_ideal`].
pub fn janet_ideal(ideal: &MonomialIdeal) -> Result<StanleyDecomposition> {
    janet_ideal_with_order(ideal, &[])
}

pub fn janet_ideal_with_order(
    ideal: &MonomialIdeal,
    order: &[usize],
) -> Result<StanleyDecomposition> {
    check_order(ideal.dim(), order)?;
    let active: Vec<usize> = (0..ideal.dim()).collect();
    let slabs = janet_slabs(ideal, &active, order, true);
    Ok(StanleyDecomposition::new(
        Target::Ideal(ideal.clone()),
        slabs,
    ))
}

fn check_order(n: usize, order: &[usize]) -> Result<()> {
    match order.iter().find(|&&j| j >= n) {
        Some(&j) => Err(Error::OutOfRange {
            what: "split variable",
            value: j,
            max: n - 1,
        }),
        None => Ok(()),
    }
}

fn require_valid(d: &StanleyDecomposition) -> Result<()> {
    let report = verify(d);
    match report.violation {
        None => Ok(()),
        Some(v) => Err(Error::InvalidDecomposition(v.to_string())),
    }
}

fn require_quotient(d: &StanleyDecomposition) -> Result<&MonomialIdeal> {
    match &d.target {
        Target::Quotient(i) => Ok(i),
        Target::Ideal(_) => Err(Error::NotApplicable(
            "transfer operates on quotient decompositions".into(),
        )),
    }
}

/// From a decomposition of `S/I'` to one of `S/(v*I')`: the complement of
/// `(v)` contributes slabs of dimension `n - 1`, and the slabs of the
/// input are shifted by `v`.
pub fn transfer_quotient_up(
    v: &Monomial,
    d: &StanleyDecomposition,
) -> Result<StanleyDecomposition> {
    let inner = require_quotient(d)?;
    if v.dim() != d.dim() {
        return Err(Error::DimensionMismatch {
            left: v.dim(),
            right: d.dim(),
        });
    }
    if v.is_identity() {
        return Err(Error::NotApplicable(
            "transfer up requires a nonidentity factor".into(),
        ));
    }
    require_valid(d)?;
    let target = Target::Quotient(inner.multiply(v));
    let mut slabs = principal_complement_slabs(v, &(0..v.dim()).collect_vec());
    slabs.extend(shift(d.slabs.clone(), v));
    Ok(StanleyDecomposition::new(target, slabs))
}

/// From a decomposition of `S/I` to one of `S/(I:v)`: keep exactly the
/// slabs meeting `(v)` — decidable as `deg_j(v) <= deg_j(origin)` for
/// every non-free `j` — and divide the kept origins by their gcd with `v`.
pub fn transfer_quotient_down(
    v: &Monomial,
    d: &StanleyDecomposition,
) -> Result<StanleyDecomposition> {
    let inner = require_quotient(d)?;
    if v.dim() != d.dim() {
        return Err(Error::DimensionMismatch {
            left: v.dim(),
            right: d.dim(),
        });
    }
    require_valid(d)?;
    let target = Target::Quotient(inner.colon(v));
    let slabs = d
        .slabs
        .iter()
        .filter(|s| (0..v.dim()).all(|j| s.free.contains(&j) || v.exp(j) <= s.origin.exp(j)))
        .map(|s| Slab::new(s.origin.div_gcd(v), s.free.clone()))
        .collect();
    Ok(StanleyDecomposition::new(target, slabs))
}

/// Re-embeds a decomposition over `K[Z]` into `n` variables, mapping the
/// i-th small-ring variable to `z[i]` and making every variable outside
/// `z` free in every slab. Raises the minimum slab dimension by exactly
/// `n - |z|`.
pub fn extend_variables(
    d: &StanleyDecomposition,
    n: usize,
    z: &[usize],
) -> Result<StanleyDecomposition> {
    if z.len() != d.dim() {
        return Err(Error::DimensionMismatch {
            left: z.len(),
            right: d.dim(),
        });
    }
    if !z.iter().tuple_windows().all(|(a, b)| a < b) || z.iter().any(|&j| j >= n) {
        return Err(Error::NotApplicable(
            "variable embedding must be strictly increasing and within the ambient ring".into(),
        ));
    }
    let embed_monomial = |m: &Monomial| {
        let mut exps = vec![0u32; n];
        for (i, &j) in z.iter().enumerate() {
            exps[j] = m.exp(i);
        }
        Monomial::new(exps)
    };
    let embed_ideal = |i: &MonomialIdeal| {
        MonomialIdeal::new(n, i.gens().iter().map(&embed_monomial).collect())
            .expect("dimensions agree")
    };
    let target = match &d.target {
        Target::Ideal(i) => Target::Ideal(embed_ideal(i)),
        Target::Quotient(i) => Target::Quotient(embed_ideal(i)),
    };
    let outside: Vec<usize> = (0..n).filter(|j| !z.contains(j)).collect();
    let slabs = d
        .slabs
        .iter()
        .map(|s| {
            let mut free: Vec<usize> = s.free.iter().map(|&i| z[i]).collect();
            free.extend(&outside);
            Slab::new(embed_monomial(&s.origin), free)
        })
        .collect();
    Ok(StanleyDecomposition::new(target, slabs))
}

/// Generators in reverse lexicographic order, the labeling used by the
/// pattern constructions.
fn gens_desc(ideal: &MonomialIdeal) -> Vec<Monomial> {
    ideal.gens().iter().rev().cloned().collect()
}

/// Pattern decomposition of a complete intersection on three generators:
/// the nonempty generator-membership patterns split into the intervals
/// `[{1},{1,2}]`, `[{2},{2,3}]`, `[{3},{1,3}]` and `[{1,2,3}]`, each of
/// which is a shifted principal complement (or `u1*u2*u3*K[all]`) because
/// the generators are pairwise coprime. Every slab has dimension at least
/// `n - 1`.
pub fn ci3(ideal: &MonomialIdeal) -> Result<StanleyDecomposition> {
    if ideal.num_gens() != 3 {
        return Err(Error::NotApplicable(
            "ci3 requires exactly three minimal generators".into(),
        ));
    }
    let gens = gens_desc(ideal);
    if !gens
        .iter()
        .tuple_combinations()
        .all(|(a, b)| a.gcd(b).is_identity())
    {
        return Err(Error::NotApplicable(
            "ci3 requires pairwise coprime generators".into(),
        ));
    }
    let n = ideal.dim();
    let active: Vec<usize> = (0..n).collect();
    let mut slabs = Vec::new();
    for (i, excluded) in [(0, 2), (1, 0), (2, 1)] {
        slabs.extend(shift(
            principal_complement_slabs(&gens[excluded], &active),
            &gens[i],
        ));
    }
    let product = gens[0].mul(&gens[1]).mul(&gens[2]);
    slabs.push(Slab::new(product, active));
    Ok(StanleyDecomposition::new(
        Target::Ideal(ideal.clone()),
        slabs,
    ))
}

/// Decomposition of a non-principal ideal with two generators after gcd
/// reduction, or with a two-variable gcd-free part: minimum slab dimension
/// exactly `n - 1`.
pub fn small_ideal(ideal: &MonomialIdeal) -> Result<StanleyDecomposition> {
    let (v, prime) = small_precheck(ideal)?;
    let n = ideal.dim();
    let slabs = if prime.num_gens() == 2 {
        // u1*K[all] plus u2 times the complement of (u1); coprimality of
        // the reduced generators makes the union direct.
        let gens = gens_desc(&prime);
        let active: Vec<usize> = (0..n).collect();
        let mut slabs = vec![Slab::new(gens[0].clone(), active.clone())];
        slabs.extend(shift(
            principal_complement_slabs(&gens[0], &active),
            &gens[1],
        ));
        slabs
    } else {
        // Two-variable part: layered staircase decomposition in the
        // subring, then all other variables become free.
        let z = support_of(&prime);
        let inner = janet_ideal(&prime.restrict(&z)?)?;
        extend_variables(&inner, n, &z)?.slabs
    };
    Ok(StanleyDecomposition::new(
        Target::Ideal(ideal.clone()),
        shift(slabs, &v),
    ))
}

/// Companion of [`small_ideal`] for the quotient, with minimum slab
/// dimension exactly `n - 2`.
pub fn small_quotient(ideal: &MonomialIdeal) -> Result<StanleyDecomposition> {
    let (v, prime) = small_precheck(ideal)?;
    let n = ideal.dim();
    if prime.num_gens() == 2 {
        return janet_quotient(ideal);
    }
    let z = support_of(&prime);
    let inner = janet_quotient(&prime.restrict(&z)?)?;
    let extended = extend_variables(&inner, n, &z)?;
    if v.is_identity() {
        Ok(extended)
    } else {
        transfer_quotient_up(&v, &extended)
    }
}

fn support_of(ideal: &MonomialIdeal) -> Vec<usize> {
    ideal
        .gens()
        .iter()
        .flat_map(|u| u.support())
        .sorted()
        .dedup()
        .collect()
}

fn small_precheck(ideal: &MonomialIdeal) -> Result<(Monomial, MonomialIdeal)> {
    if ideal.is_principal() {
        return Err(Error::NotApplicable(
            "small-case construction requires a non-principal ideal".into(),
        ));
    }
    let (v, prime) = ideal.gcd_part()?;
    let c = support_of(&prime).len();
    if prime.num_gens() != 2 && c != 2 {
        return Err(Error::NotApplicable(format!(
            "small-case construction requires g=2 or c=2 (got g={}, c={c})",
            prime.num_gens(),
        )));
    }
    Ok((v, prime))
}

/// The variable (by smallest index) dividing exactly two of the three
/// generators, with the positions of those two and of the third. Exists
/// whenever the triple is gcd-free and not a complete intersection.
fn shared_var(gens: &[Monomial]) -> Option<(usize, usize, usize, usize)> {
    let n = gens[0].dim();
    for j in 0..n {
        let holders: Vec<usize> = (0..3).filter(|&i| gens[i].exp(j) > 0).collect();
        if holders.len() == 2 {
            let other = (0..3).find(|i| !holders.contains(i)).unwrap();
            return Some((j, holders[0], holders[1], other));
        }
    }
    None
}

fn is_ci(ideal: &MonomialIdeal) -> bool {
    ideal.stats().is_complete_intersection
}

/// Decomposition of an ideal with exactly three minimal generators, with
/// minimum slab dimension exactly `n - 1`: gcd-reduce, then either the
/// complete-intersection pattern or a layered split along a variable
/// shared by exactly two generators, recursing on the colon ideal.
pub fn three_gen_ideal(ideal: &MonomialIdeal) -> Result<ConstructionTrace> {
    if ideal.num_gens() != 3 {
        return Err(Error::NotApplicable(
            "three-generator construction requires g=3".into(),
        ));
    }
    let mut tracer = Tracer::new();
    let (v, prime) = ideal.gcd_part()?;
    if !v.is_identity() {
        tracer.push(
            Rule::GcdReduce,
            format!("v={v}; reduced={}", ideal_text(&prime)),
        )?;
    }
    let slabs = shift(three_gen_ideal_rec(&prime, &mut tracer)?, &v);
    Ok(ConstructionTrace {
        steps: tracer.steps,
        result: StanleyDecomposition::new(Target::Ideal(ideal.clone()), slabs),
    })
}

fn three_gen_ideal_rec(ideal: &MonomialIdeal, tracer: &mut Tracer) -> Result<Vec<Slab>> {
    let n = ideal.dim();
    let all: Vec<usize> = (0..n).collect();
    match ideal.num_gens() {
        1 => {
            let g = ideal.gens()[0].clone();
            let kind = if g.is_identity() { "unit" } else { "principal" };
            tracer.push(
                Rule::SmallCase,
                format!("kind={kind}; ideal={}", ideal_text(ideal)),
            )?;
            Ok(vec![Slab::new(g, all)])
        }
        2 => {
            tracer.push(
                Rule::SmallCase,
                format!("kind=g2; ideal={}", ideal_text(ideal)),
            )?;
            Ok(small_ideal(ideal)?.slabs)
        }
        3 => {
            if is_ci(ideal) {
                tracer.push(Rule::CiBase, format!("ideal={}", ideal_text(ideal)))?;
                return Ok(ci3(ideal)?.slabs);
            }
            let gens = gens_desc(ideal);
            let (var, h1, h2, other) = shared_var(&gens)
                .expect("a gcd-free non-CI triple has a variable shared by exactly two");
            let a = gens[h1].exp(var).min(gens[h2].exp(var));
            let outside = &gens[other];
            let colon = ideal.colon(&Monomial::var_pow(var, a, n));
            tracer.push(
                Rule::Lemma13Split,
                format!(
                    "var=x{}; a={a}; outside={outside}; colon={}",
                    var + 1,
                    ideal_text(&colon)
                ),
            )?;
            let mut slabs = Vec::new();
            let free: Vec<usize> = all.iter().copied().filter(|&k| k != var).collect();
            for t in 0..a {
                let mut exps = outside.exps().to_vec();
                exps[var] = t;
                slabs.push(Slab::new(Monomial::new(exps), free.clone()));
            }
            let sub = three_gen_ideal_rec(&colon, tracer)?;
            slabs.extend(shift(sub, &Monomial::var_pow(var, a, n)));
            Ok(slabs)
        }
        g => unreachable!("three-generator recursion met g={g}"),
    }
}

/// Quotient companion of [`three_gen_ideal`] for `g(I) <= 3`: principal
/// complement, Janet splitting, or the layered recursion whose layers are
/// principal complements inside the hyperplane ring. The minimum slab
/// dimension is at least `n - 3`, and at least `n - 2` when no complete
/// intersection is met.
pub fn three_gen_quotient(ideal: &MonomialIdeal) -> Result<ConstructionTrace> {
    if ideal.num_gens() > 3 {
        return Err(Error::NotApplicable(
            "quotient construction requires g<=3".into(),
        ));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut tracer = Tracer::new();
    let slabs = three_gen_quotient_rec(ideal, &mut tracer)?;
    Ok(ConstructionTrace {
        steps: tracer.steps,
        result: StanleyDecomposition::new(Target::Quotient(ideal.clone()), slabs),
    })
}

fn three_gen_quotient_rec(ideal: &MonomialIdeal, tracer: &mut Tracer) -> Result<Vec<Slab>> {
    let n = ideal.dim();
    if ideal.is_zero() {
        tracer.push(Rule::JanetSplit, format!("ideal={}", ideal_text(ideal)))?;
        return Ok(vec![Slab::new(Monomial::one(n), 0..n)]);
    }
    if ideal.is_principal() {
        tracer.push(
            Rule::SmallCase,
            format!("kind=principal; ideal={}", ideal_text(ideal)),
        )?;
        return Ok(principal_complement(&ideal.gens()[0])?.slabs);
    }
    if ideal.num_gens() == 2 || is_ci(ideal) {
        tracer.push(Rule::JanetSplit, format!("ideal={}", ideal_text(ideal)))?;
        return Ok(janet_quotient(ideal)?.slabs);
    }
    // g = 3, not a complete intersection.
    let (v, prime) = ideal.gcd_part()?;
    if !v.is_identity() {
        tracer.push(
            Rule::Transfer,
            format!("v={v}; inner={}", ideal_text(&prime)),
        )?;
        let sub = three_gen_quotient_rec(&prime, tracer)?;
        let mut slabs = principal_complement_slabs(&v, &(0..n).collect_vec());
        slabs.extend(shift(sub, &v));
        return Ok(slabs);
    }
    let gens = gens_desc(ideal);
    let (var, h1, h2, other) =
        shared_var(&gens).expect("a gcd-free non-CI triple has a variable shared by exactly two");
    let a = gens[h1].exp(var).min(gens[h2].exp(var));
    let outside = &gens[other];
    let colon = ideal.colon(&Monomial::var_pow(var, a, n));
    tracer.push(
        Rule::Lemma13Split,
        format!(
            "var=x{}; a={a}; outside={outside}; colon={}",
            var + 1,
            ideal_text(&colon)
        ),
    )?;
    // Layers x_var^t for t < a: the quotient there is the complement of
    // (outside) inside the ring without x_var, so slabs have dimension
    // n - 2.
    let hyperplane: Vec<usize> = (0..n).filter(|&k| k != var).collect();
    let mut slabs = Vec::new();
    for t in 0..a {
        for s in principal_complement_slabs(outside, &hyperplane) {
            let mut exps = s.origin.exps().to_vec();
            exps[var] = t;
            slabs.push(Slab::new(Monomial::new(exps), s.free));
        }
    }
    let sub = if colon.is_unit() {
        vec![]
    } else {
        three_gen_quotient_rec(&colon, tracer)?
    };
    slabs.extend(shift(sub, &Monomial::var_pow(var, a, n)));
    Ok(slabs)
}

/// Decomposition of a saturated non-principal ideal in three variables
/// with minimum slab dimension exactly 2: peel off a hyperplane
/// restriction that is itself saturated (hence principal or zero) and
/// recurse on the strictly larger colon ideal, which stays saturated.
pub fn saturated_3var(ideal: &MonomialIdeal) -> Result<ConstructionTrace> {
    if ideal.dim() != 3 {
        return Err(Error::NotApplicable(
            "saturated construction is specific to three variables".into(),
        ));
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if ideal.is_principal() {
        return Err(Error::NotApplicable(
            "saturated construction requires a non-principal ideal".into(),
        ));
    }
    if !ideal.saturate().1 {
        return Err(Error::NotApplicable("ideal is not saturated".into()));
    }
    let mut tracer = Tracer::new();
    let slabs = saturated_rec(ideal, &mut tracer)?;
    Ok(ConstructionTrace {
        steps: tracer.steps,
        result: StanleyDecomposition::new(Target::Ideal(ideal.clone()), slabs),
    })
}

fn saturated_rec(ideal: &MonomialIdeal, tracer: &mut Tracer) -> Result<Vec<Slab>> {
    let all: Vec<usize> = vec![0, 1, 2];
    if ideal.is_principal() {
        let g = ideal.gens()[0].clone();
        let kind = if g.is_identity() { "unit" } else { "principal" };
        tracer.push(
            Rule::SmallCase,
            format!("kind={kind}; ideal={}", ideal_text(ideal)),
        )?;
        return Ok(vec![Slab::new(g, all)]);
    }
    let stats = ideal.stats();
    if stats.g == 2 || stats.c == 2 {
        tracer.push(
            Rule::SmallCase,
            format!("kind=small; ideal={}", ideal_text(ideal)),
        )?;
        return Ok(small_ideal(ideal)?.slabs);
    }
    let (v, prime) = ideal.gcd_part()?;
    if !v.is_identity() {
        tracer.push(
            Rule::GcdReduce,
            format!("v={v}; reduced={}", ideal_text(&prime)),
        )?;
        return Ok(shift(saturated_rec(&prime, tracer)?, &v));
    }
    // gcd-free, c = 3, g >= 3, saturated: some hyperplane restriction is
    // saturated, hence zero or principal in its two variables.
    let mut choice = None;
    for j in 0..3 {
        let z: Vec<usize> = (0..3).filter(|&k| k != j).collect();
        let restr = ideal.restrict(&z)?;
        if restr.saturate().1 {
            choice = Some((j, z, restr));
            break;
        }
    }
    let (j, z, restr) = choice
        .ok_or_else(|| Error::NotApplicable("no hyperplane restriction is saturated".into()))?;
    tracer.push(
        Rule::Extend,
        format!("layer=x{}^0; restriction={}", j + 1, ideal_text(&restr)),
    )?;
    let mut slabs = Vec::new();
    if !restr.is_zero() {
        if !restr.is_principal() {
            return Err(Error::NotApplicable(
                "saturated hyperplane restriction is not principal".into(),
            ));
        }
        let u = &restr.gens()[0];
        let mut exps = vec![0u32; 3];
        for (i, &k) in z.iter().enumerate() {
            exps[k] = u.exp(i);
        }
        slabs.push(Slab::new(Monomial::new(exps), z));
    }
    let colon = ideal.colon(&Monomial::var(j, 3));
    tracer.push(
        Rule::Lemma13Split,
        format!("var=x{}; a=1; colon={}", j + 1, ideal_text(&colon)),
    )?;
    let sub = saturated_rec(&colon, tracer)?;
    slabs.extend(shift(sub, &Monomial::var(j, 3)));
    Ok(slabs)
}
