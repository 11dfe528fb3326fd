//! Binomial membership and minimal generators of the defining ideal of the
//! monomial curve.
//!
//! A binomial `X^alpha - X^beta` lies in the ideal exactly when
//! `|alpha| = |beta|` and `|alpha|_A = |beta|_A`. Minimal generators are
//! found per bidegree `(total degree, A-degree)` from the fiber graph: the
//! vertices are the exponent vectors of the fiber, two vertices are adjacent
//! when they share a support coordinate, and each connected component beyond
//! the first contributes exactly one generator. Coefficients never matter:
//! every generator is a pure difference, so the output is field-independent.
//!
//! Binomials are oriented and representatives chosen by graded reverse
//! lexicographic order, the common computer-algebra default, which keeps the
//! rendered generators in the shape a CAS would print.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{binomial_saturating, rho_bound};
use crate::limits::MAX_FIBER_MONOMIALS;
use crate::sumset::NormalForm;

/// A difference of two monomials, stored as exponent vectors in canonical
/// form: the common monomial factor is removed and `alpha` is the greater
/// side in graded reverse lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Binomial {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
}

impl Binomial {
    /// Canonicalize an arbitrary pair of exponent vectors.
    pub fn canonical(mut alpha: Vec<u32>, mut beta: Vec<u32>) -> Binomial {
        debug_assert_eq!(alpha.len(), beta.len());
        for i in 0..alpha.len() {
            let m = alpha[i].min(beta[i]);
            alpha[i] -= m;
            beta[i] -= m;
        }
        if grevlex_cmp(&alpha, &beta) == Ordering::Less {
            std::mem::swap(&mut alpha, &mut beta);
        }
        Binomial { alpha, beta }
    }

    /// `x`-notation with 1-based indices, e.g. `x2^2 - x1*x3`.
    pub fn render(&self) -> String {
        format!(
            "{} - {}",
            render_monomial(&self.alpha),
            render_monomial(&self.beta)
        )
    }
}

fn render_monomial(exps: &[u32]) -> String {
    let factors: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{}", i + 1, e)
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// Graded reverse lexicographic comparison. Higher total degree is greater;
/// for equal degrees the vector whose last differing coordinate is smaller
/// is the greater one.
pub(crate) fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

fn total_degree(exps: &[u32]) -> u64 {
    exps.iter().map(|&e| e as u64).sum()
}

fn a_degree(a: &NormalForm, exps: &[u32]) -> u64 {
    exps.iter()
        .zip(a.elements())
        .map(|(&e, &ai)| e as u64 * ai)
        .sum()
}

/// Membership test: `X^alpha - X^beta` is in the ideal iff total degrees and
/// A-degrees both agree.
pub fn binomial_in_ideal(a: &NormalForm, alpha: &[u32], beta: &[u32]) -> Result<bool> {
    for v in [alpha, beta] {
        if v.len() != a.n() {
            return Err(Error::ArityMismatch {
                expected: a.n(),
                got: v.len(),
            });
        }
    }
    Ok(total_degree(alpha) == total_degree(beta) && a_degree(a, alpha) == a_degree(a, beta))
}

/// All exponent vectors with the given total degree and A-degree, sorted
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fiber {
    pub degree: u64,
    pub a_degree: u64,
    pub elements: Vec<Vec<u32>>,
}

/// Enumerate one fiber by depth-first search over coordinates, pruning on
/// the reachable A-degree range.
pub fn fiber(a: &NormalForm, s: u64, m: u64) -> Result<Fiber> {
    let max = s.checked_mul(a.a_n()).ok_or(Error::Overflow("s * a_n"))?;
    if m > max {
        return Ok(Fiber {
            degree: s,
            a_degree: m,
            elements: Vec::new(),
        });
    }
    let els = a.elements();
    let n = els.len();
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    let mut visited: u64 = 0;

    fn dfs(
        els: &[u64],
        i: usize,
        deg_left: u64,
        adeg_left: u64,
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
        visited: &mut u64,
    ) -> Result<()> {
        *visited += 1;
        if *visited > MAX_FIBER_MONOMIALS {
            return Err(Error::ResourceLimit {
                what: "fiber enumeration",
                required: *visited,
                budget: MAX_FIBER_MONOMIALS,
            });
        }
        let n = els.len();
        if i + 1 == n {
            if deg_left * els[i] == adeg_left {
                current[i] = deg_left as u32;
                out.push(current.clone());
                current[i] = 0;
            }
            return Ok(());
        }
        // with deg_left picks from els[i..], the A-degree spans
        // [deg_left * els[i], deg_left * els[n-1]]
        if adeg_left < deg_left * els[i] || adeg_left > deg_left * els[n - 1] {
            return Ok(());
        }
        for e in 0..=deg_left {
            let used = e * els[i];
            if used > adeg_left {
                break;
            }
            current[i] = e as u32;
            dfs(
                els,
                i + 1,
                deg_left - e,
                adeg_left - used,
                current,
                out,
                visited,
            )?;
        }
        current[i] = 0;
        Ok(())
    }

    dfs(els, 0, s, m, &mut current, &mut out, &mut visited)?;
    out.sort_unstable();
    Ok(Fiber {
        degree: s,
        a_degree: m,
        elements: out,
    })
}

/// One emitted generator with its bidegree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealGenerator {
    pub degree: u64,
    pub a_degree: u64,
    pub binomial: Binomial,
}

/// Canonical minimal generating set up to a total-degree cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    pub degree_cap: u64,
    pub generators: Vec<IdealGenerator>,
}

impl GeneratorSet {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn rendered(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|g| g.binomial.render())
            .collect()
    }
}

/// Minimal binomial generators of the ideal in total degree `2..=cap`.
/// The default cap used by callers is `rho(A) + 1`.
pub fn minimal_generators(a: &NormalForm, cap: u64) -> Result<GeneratorSet> {
    if cap < 2 {
        return Err(Error::DegreeCapTooSmall(cap));
    }
    let fibers = enumerate_fibers(a, cap)?;
    Ok(generators_from_fibers(&fibers, cap))
}

/// Default generator cap, `rho(A) + 1`.
pub fn default_degree_cap(a: &NormalForm) -> u64 {
    rho_bound(a) + 1
}

type FiberTable = BTreeMap<(u64, u64), Vec<Vec<u32>>>;

/// Bucket every monomial of total degree `2..=cap` by bidegree, keeping only
/// fibers with at least two elements (singleton fibers carry no binomials).
fn enumerate_fibers(a: &NormalForm, cap: u64) -> Result<FiberTable> {
    let n = a.n() as u64;
    let expected = cap
        .checked_add(n)
        .map(|t| binomial_saturating(t, n))
        .unwrap_or(u128::MAX);
    if expected > MAX_FIBER_MONOMIALS as u128 {
        return Err(Error::ResourceLimit {
            what: "fiber enumeration",
            required: expected.min(u64::MAX as u128) as u64,
            budget: MAX_FIBER_MONOMIALS,
        });
    }
    let mut table: FiberTable = BTreeMap::new();
    let mut current = vec![0u32; a.n()];
    for s in 2..=cap {
        let mut by_adeg: BTreeMap<u64, Vec<Vec<u32>>> = BTreeMap::new();
        fill_monomials(a.elements(), 0, s, 0, &mut current, &mut by_adeg);
        for (m, mut elements) in by_adeg {
            if elements.len() >= 2 {
                elements.sort_unstable();
                table.insert((s, m), elements);
            }
        }
    }
    Ok(table)
}

fn fill_monomials(
    els: &[u64],
    i: usize,
    deg_left: u64,
    adeg: u64,
    current: &mut Vec<u32>,
    out: &mut BTreeMap<u64, Vec<Vec<u32>>>,
) {
    let n = els.len();
    if i + 1 == n {
        current[i] = deg_left as u32;
        out.entry(adeg + deg_left * els[i])
            .or_default()
            .push(current.clone());
        current[i] = 0;
        return;
    }
    for e in 0..=deg_left {
        current[i] = e as u32;
        fill_monomials(els, i + 1, deg_left - e, adeg + e * els[i], current, out);
    }
    current[i] = 0;
}

/// Union-find with path halving.
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn support_mask(exps: &[u32]) -> Vec<u64> {
    let mut mask = vec![0u64; exps.len().div_ceil(64)];
    for (i, &e) in exps.iter().enumerate() {
        if e > 0 {
            mask[i / 64] |= 1 << (i % 64);
        }
    }
    mask
}

fn masks_intersect(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(&x, &y)| x & y != 0)
}

/// Components of the shared-support graph on one fiber.
fn fiber_components(elements: &[Vec<u32>]) -> Dsu {
    let masks: Vec<Vec<u64>> = elements.iter().map(|e| support_mask(e)).collect();
    let mut dsu = Dsu::new(elements.len());
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            if masks_intersect(&masks[i], &masks[j]) {
                dsu.union(i, j);
            }
        }
    }
    dsu
}

fn generators_from_fibers(fibers: &FiberTable, cap: u64) -> GeneratorSet {
    let mut generators = Vec::new();
    for (&(s, m), elements) in fibers.iter() {
        if s > cap {
            continue;
        }
        let mut dsu = fiber_components(elements);
        // grevlex-least element of each component; component roots keyed by
        // dsu root index
        let mut rep: BTreeMap<usize, usize> = BTreeMap::new();
        for i in 0..elements.len() {
            let root = dsu.find(i);
            let r = rep.entry(root).or_insert(i);
            if grevlex_cmp(&elements[i], &elements[*r]) == Ordering::Less {
                *r = i;
            }
        }
        if rep.len() < 2 {
            continue;
        }
        // the principal component is the one holding the grevlex-least
        // element of the whole fiber
        let least = (0..elements.len())
            .min_by(|&i, &j| grevlex_cmp(&elements[i], &elements[j]))
            .expect("nonempty fiber");
        let principal_root = dsu.find(least);
        let principal = elements[rep[&principal_root]].clone();
        let mut others: Vec<&usize> = rep
            .iter()
            .filter(|(&root, _)| root != principal_root)
            .map(|(_, i)| i)
            .collect();
        others.sort_by(|&&i, &&j| grevlex_cmp(&elements[i], &elements[j]));
        for &&i in &others {
            generators.push(IdealGenerator {
                degree: s,
                a_degree: m,
                binomial: Binomial::canonical(elements[i].clone(), principal.clone()),
            });
        }
    }
    GeneratorSet {
        degree_cap: cap,
        generators,
    }
}

/// Outcome of the four generator checks run by the verification suite. A
/// `None` witness means the check passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealVerification {
    pub generators: GeneratorSet,
    pub soundness_witness: Option<String>,
    pub generation_witness: Option<String>,
    pub minimality_witness: Option<String>,
    pub stability_witness: Option<String>,
}

/// Compute the generators at `cap` and verify soundness, generation,
/// minimality and cap-stability against the fibers up to `cap + 2`.
pub fn verify_ideal(a: &NormalForm, cap: u64) -> Result<IdealVerification> {
    if cap < 2 {
        return Err(Error::DegreeCapTooSmall(cap));
    }
    let fibers = enumerate_fibers(a, cap + 2)?;
    let generators = generators_from_fibers(&fibers, cap);
    let extended = generators_from_fibers(&fibers, cap + 2);

    // soundness: every emitted binomial satisfies the membership predicate
    let mut soundness_witness = None;
    for g in &generators.generators {
        if !binomial_in_ideal(a, &g.binomial.alpha, &g.binomial.beta)? {
            soundness_witness = Some(format!(
                "generator {} at ({}, {}) fails membership",
                g.binomial.render(),
                g.degree,
                g.a_degree
            ));
            break;
        }
    }

    // generation: within every fiber of degree <= cap, rewriting by the
    // emitted generators connects all exponent vectors
    let mut generation_witness = None;
    'fibers: for (&(s, m), elements) in fibers.iter() {
        if s > cap {
            continue;
        }
        let mut dsu = move_components(elements, &generators.generators, None);
        let root = dsu.find(0);
        for i in 1..elements.len() {
            if dsu.find(i) != root {
                generation_witness = Some(format!(
                    "fiber ({s}, {m}): {:?} not reachable from {:?}",
                    elements[i], elements[0]
                ));
                break 'fibers;
            }
        }
    }

    // minimality: dropping any single generator disconnects its own fiber
    let mut minimality_witness = None;
    for (skip, g) in generators.generators.iter().enumerate() {
        let elements = &fibers[&(g.degree, g.a_degree)];
        let mut dsu = move_components(elements, &generators.generators, Some(skip));
        let ai = elements
            .binary_search(&g.binomial.alpha)
            .expect("alpha in fiber");
        let bi = elements
            .binary_search(&g.binomial.beta)
            .expect("beta in fiber");
        if dsu.find(ai) == dsu.find(bi) {
            minimality_witness = Some(format!(
                "generator {} at ({}, {}) is redundant",
                g.binomial.render(),
                g.degree,
                g.a_degree
            ));
            break;
        }
    }

    // stability: raising the cap by two yields nothing new
    let stability_witness = extended
        .generators
        .iter()
        .find(|g| g.degree > cap)
        .map(|g| {
            format!(
                "new generator {} appears at degree {} past cap {}",
                g.binomial.render(),
                g.degree,
                cap
            )
        });

    Ok(IdealVerification {
        generators,
        soundness_witness,
        generation_witness,
        minimality_witness,
        stability_witness,
    })
}

/// Connected components of one fiber under generator rewriting moves:
/// `v -> v - alpha + beta` (and the reverse) whenever the move stays in
/// non-negative exponents. `skip` omits one generator.
fn move_components(elements: &[Vec<u32>], gens: &[IdealGenerator], skip: Option<usize>) -> Dsu {
    let mut dsu = Dsu::new(elements.len());
    let mut moved = vec![0u32; elements.first().map_or(0, |e| e.len())];
    for (i, v) in elements.iter().enumerate() {
        for (gi, g) in gens.iter().enumerate() {
            if Some(gi) == skip {
                continue;
            }
            for (from, to) in [
                (&g.binomial.alpha, &g.binomial.beta),
                (&g.binomial.beta, &g.binomial.alpha),
            ] {
                if v.iter().zip(from.iter()).all(|(&ve, &fe)| ve >= fe) {
                    for k in 0..v.len() {
                        moved[k] = v[k] - from[k] + to[k];
                    }
                    if let Ok(j) = elements.binary_search(&moved) {
                        dsu.union(i, j);
                    }
                }
            }
        }
    }
    dsu
}
