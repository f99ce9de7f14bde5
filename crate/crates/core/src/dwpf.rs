//! The domain-wall partition function `K(u|v)` and the summation identities
//! built on it.
//!
//! `K` is evaluated from its determinant representation with the prefactor
//! `h(u, v)` absorbed row by row into the matrix:
//!
//! ```text
//! K(u|v) = Δ'(u) Δ(v) det[ g(u_j, v_k) · prod_{l != k} h(u_j, v_l) ]
//! ```
//!
//! The entries are then polynomial in `h`, so points where some
//! `u_j - v_k + c = 0` need no special treatment. Only the genuine poles
//! `u_j = v_k` (and repeated elements inside `u` or `v`) are rejected.

use crate::check::{expect_scalar, split_digest, CheckReport};
use crate::error::{Error, Result};
use crate::linalg::{determinant, solve};
use crate::scalar::{Coupling, Scalar};
use crate::varsets::VarSet;

/// Arguments of `K(u|v)` under a given coupling.
#[derive(Debug, Clone, PartialEq)]
pub struct KArgs<T> {
    pub u_set: VarSet<T>,
    pub v_set: VarSet<T>,
    pub c: Coupling<T>,
}

impl<T: Scalar> KArgs<T> {
    pub fn new(u_set: VarSet<T>, v_set: VarSet<T>, c: Coupling<T>) -> Result<Self> {
        if u_set.len() != v_set.len() {
            return Err(Error::SizeMismatch {
                sizes: vec![u_set.len(), v_set.len()],
                len: u_set.len(),
            });
        }
        Ok(KArgs { u_set, v_set, c })
    }

    pub fn eval(&self) -> Result<T> {
        partition_function(&self.u_set, &self.v_set, &self.c)
    }
}

/// `(Δ'(u), Δ(v)) = (prod_{j<k} g(u_j,u_k), prod_{j>k} g(v_j,v_k))`
pub fn delta_products<T: Scalar>(u: &[T], v: &[T], c: &Coupling<T>) -> Result<(T, T)> {
    let mut du = T::one();
    for j in 0..u.len() {
        for k in j + 1..u.len() {
            du *= &c.g(&u[j], &u[k])?;
        }
    }
    let mut dv = T::one();
    for j in 0..v.len() {
        for k in 0..j {
            dv *= &c.g(&v[j], &v[k])?;
        }
    }
    Ok((du, dv))
}

/// `K(u|v)`; `K(∅|∅) = 1`.
pub fn partition_function<T: Scalar>(u: &[T], v: &[T], c: &Coupling<T>) -> Result<T> {
    let n = u.len();
    if v.len() != n {
        return Err(Error::SizeMismatch {
            sizes: vec![n, v.len()],
            len: n,
        });
    }
    if n == 0 {
        return Ok(T::one());
    }
    let (du, dv) = delta_products(u, v, c)?;
    let mut m = Vec::with_capacity(n);
    for uj in u {
        let h: Vec<T> = v.iter().map(|vl| c.h(uj, vl)).collect();
        let mut row = Vec::with_capacity(n);
        for (k, vk) in v.iter().enumerate() {
            let mut e = c.g(uj, vk)?;
            for (l, hl) in h.iter().enumerate() {
                if l != k {
                    e *= hl;
                }
            }
            row.push(e);
        }
        m.push(row);
    }
    Ok(du * dv * determinant(m))
}

fn shifted<T: Scalar>(xs: &[T], d: &T) -> Vec<T> {
    xs.iter().map(|x| x.clone() + d.clone()).collect()
}

fn with<T: Scalar>(xs: &[T], extra: T) -> Vec<T> {
    let mut v = xs.to_vec();
    v.push(extra);
    v
}

/// Checks the three shift/reflection properties of `K` at `(u, v)` with the
/// auxiliary point `z`:
///
/// * `K({u, z-c} | {v, z}) = K({u, z} | {v, z+c}) = -K(u|v)`
/// * `K(u-c | v) = K(u | v+c) = (-1)^n K(v|u) / f(v, u)`
/// * `K(u|v)` evaluated with `-c` equals `K(v|u)`
pub fn shift_properties_check<T: Scalar>(
    u: &[T],
    v: &[T],
    z: &T,
    c: &Coupling<T>,
) -> Result<CheckReport> {
    let n = u.len();
    let cv = c.value();
    let base = partition_function(u, v, c)?;

    let a1 = partition_function(&with(u, z.clone() - cv.clone()), &with(v, z.clone()), c)?;
    expect_scalar("K({u,z-c}|{v,z}) = -K(u|v)", &a1, &-base.clone())?;
    let a2 = partition_function(&with(u, z.clone()), &with(v, z.clone() + cv.clone()), c)?;
    expect_scalar("K({u,z}|{v,z+c}) = -K(u|v)", &a2, &-base.clone())?;

    let b1 = partition_function(&shifted(u, &-cv.clone()), v, c)?;
    let b2 = partition_function(u, &shifted(v, cv), c)?;
    let swapped = partition_function(v, u, c)?;
    let b3 = (T::sign(n) * swapped.clone()).checked_quot(&c.f_set(v, u)?)?;
    expect_scalar("K(u-c|v) = K(u|v+c)", &b1, &b2)?;
    expect_scalar("K(u|v+c) = (-1)^n K(v|u)/f(v,u)", &b2, &b3)?;

    let reflected = partition_function(u, v, &c.negated())?;
    expect_scalar("K(u|v) at -c = K(v|u)", &reflected, &swapped)?;

    Ok(CheckReport::new("K shift properties", 6))
}

/// Symmetry of `K` under every permutation of `u` (with `v` fixed) and every
/// permutation of `v` (with `u` fixed).
pub fn permutation_symmetry_check<T: Scalar>(
    u: &[T],
    v: &[T],
    c: &Coupling<T>,
) -> Result<CheckReport> {
    let base = partition_function(u, v, c)?;
    let mut count = 0;
    for p in permutations(u.len()) {
        let pu: Vec<T> = p.iter().map(|&i| u[i].clone()).collect();
        let pv: Vec<T> = p.iter().map(|&i| v[i].clone()).collect();
        expect_scalar(
            &format!("K symmetric in u under {p:?}"),
            &partition_function(&pu, v, c)?,
            &base,
        )?;
        expect_scalar(
            &format!("K symmetric in v under {p:?}"),
            &partition_function(u, &pv, c)?,
            &base,
        )?;
        count += 2;
    }
    Ok(CheckReport::new("K permutation symmetry", count))
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Cauchy determinant: `g(u, v) = Δ'(u) Δ(v) det[g(u_j, v_k)]`.
pub fn cauchy_determinant_check<T: Scalar>(
    u: &[T],
    v: &[T],
    c: &Coupling<T>,
) -> Result<CheckReport> {
    if u.len() != v.len() {
        return Err(Error::SizeMismatch {
            sizes: vec![u.len(), v.len()],
            len: u.len(),
        });
    }
    let lhs = c.g_set(u, v)?;
    let (du, dv) = delta_products(u, v, c)?;
    let m = u
        .iter()
        .map(|uj| v.iter().map(|vk| c.g(uj, vk)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let rhs = du * dv * determinant(m);
    expect_scalar("Cauchy determinant", &lhs, &rhs)?;
    Ok(CheckReport::new("Cauchy determinant", 1))
}

/// Outcome of the residue reconstruction of `K` in its last `u` argument.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidueReport<T> {
    /// Degree of the numerator `P` in `K = P(u_n) / prod_k (u_n - v_k)`.
    pub numerator_degree: Option<usize>,
    /// Residue at `u_n = v_k`, one per `k`.
    pub residues: Vec<T>,
}

/// Reconstructs `K(u|v)` as a rational function of `u_n` by exact
/// interpolation and checks its residues at every `v_k` against the
/// recursion `res = c f(v_k, v_{≠k}) f(u_{<n}, v_k) K(u_{<n} | v_{≠k})`.
///
/// The numerator is interpolated with degree bound `n` from `n + 1` sample
/// points far from every pole, then validated at one more point; its actual
/// degree must not exceed `n - 1`.
pub fn residue_check<T: Scalar>(u: &[T], v: &[T], c: &Coupling<T>) -> Result<ResidueReport<T>> {
    let n = u.len();
    if n == 0 || v.len() != n {
        return Err(Error::SizeMismatch {
            sizes: vec![n, v.len()],
            len: n,
        });
    }
    let rest = &u[..n - 1];
    let numerator = |t: &T| -> Result<T> {
        let mut k = partition_function(&with(rest, t.clone()), v, c)?;
        for vk in v {
            k *= &(t.clone() - vk.clone());
        }
        Ok(k)
    };

    let samples = sample_points(u, v, n + 2);
    let (fit, check) = samples.split_at(n + 1);
    let mut vander = Vec::with_capacity(n + 1);
    let mut values = Vec::with_capacity(n + 1);
    for t in fit {
        vander.push(powers(t, n + 1));
        values.push(numerator(t)?);
    }
    let coeffs = solve(&vander, &values)?;
    let eval_poly = |t: &T| -> T {
        coeffs
            .iter()
            .zip(powers(t, n + 1))
            .fold(T::zero(), |acc, (a, p)| acc + a.clone() * p)
    };
    if eval_poly(&check[0]) != numerator(&check[0])? {
        return Err(Error::Reconstruction(format!(
            "interpolant misses K at validation point {}",
            check[0]
        )));
    }
    let degree = coeffs.iter().rposition(|a| !a.is_zero());
    if degree.is_some_and(|d| d + 1 > n) {
        return Err(Error::check(
            "numerator degree <= n-1",
            format!("degree {} for n = {n}", degree.unwrap()),
        ));
    }

    let mut residues = Vec::with_capacity(n);
    for (k, vk) in v.iter().enumerate() {
        let mut denom = T::one();
        for (l, vl) in v.iter().enumerate() {
            if l != k {
                denom *= &(vk.clone() - vl.clone());
            }
        }
        let res = eval_poly(vk).checked_quot(&denom)?;
        let v_rest: Vec<T> = v
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != k)
            .map(|(_, x)| x.clone())
            .collect();
        let expected = c.value().clone()
            * c.f_set(std::slice::from_ref(vk), &v_rest)?
            * c.f_set(rest, std::slice::from_ref(vk))?
            * partition_function(rest, &v_rest, c)?;
        expect_scalar(
            &format!("residue of K at u_n = v_{}", k + 1),
            &res,
            &expected,
        )?;
        residues.push(res);
    }
    Ok(ResidueReport {
        numerator_degree: degree,
        residues,
    })
}

fn powers<T: Scalar>(t: &T, count: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(count);
    let mut p = T::one();
    for _ in 0..count {
        out.push(p.clone());
        p *= t;
    }
    out
}

/// Integer points beyond every element of `u` and `v`.
fn sample_points<T: Scalar>(u: &[T], v: &[T], count: usize) -> Vec<T> {
    let mut start = T::one();
    for x in u.iter().chain(v) {
        let a = if *x < T::zero() {
            -x.clone()
        } else {
            x.clone()
        };
        while start <= a {
            start = start + T::one();
        }
    }
    (0..count)
        .map(|k| start.clone() + T::from_int(k as i64 + 1))
        .collect()
}

/// The rewrites `1/h(v, u) = -K(u | v+c)` and `K(u-c | v) = -1/h(v, u)` for
/// single elements, computed both ways.
pub fn inverse_h_check<T: Scalar>(u: &T, v: &T, c: &Coupling<T>) -> Result<CheckReport> {
    let cv = c.value();
    let inv_h = T::one().checked_quot(&c.h(v, u))?;
    let k1 = partition_function(std::slice::from_ref(u), &[v.clone() + cv.clone()], c)?;
    expect_scalar("1/h(v,u) = -K(u|v+c)", &inv_h, &-k1)?;
    let k2 = partition_function(&[u.clone() - cv.clone()], std::slice::from_ref(v), c)?;
    expect_scalar("K(u-c|v) = -1/h(v,u)", &k2, &-inv_h)?;
    Ok(CheckReport::new("1/h as K", 2))
}

/// Which closed-form summation identity a [`LemmaCase`] instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LemmaId {
    /// `sum g(w_α,u) g(w_ᾱ,v) g(w_ᾱ,w_α) = g(w,u) g(w,v) / g(u,v)`
    CauchySum,
    /// `sum K(w_α|u) K(v|w_ᾱ) f(w_ᾱ,w_α) = (-1)^{#u} f(w,u) K({u-c, v}|w)`
    DwpfSum,
    /// `sum K(v|{u_ᾱ, ξ}) g(u_α, ξ) f(u_ᾱ, u_α) = (f(u,ξ) - f(v,ξ)) K(v|u)`
    OneOutU,
    /// `sum K({v_ᾱ, ξ}|u) g(v_α, ξ) f(v_α, v_ᾱ) = (f(ξ,u) - f(ξ,v)) K(v|u)`
    OneOutV,
    /// `sum f(γ_ρ,γ_σ) g(τ,γ_ρ) g(x,γ_ρ) = g(x,τ) (f(τ,γ) - f(x,γ))`
    Contour,
}

impl LemmaId {
    pub const ALL: [LemmaId; 5] = [
        LemmaId::CauchySum,
        LemmaId::DwpfSum,
        LemmaId::OneOutU,
        LemmaId::OneOutV,
        LemmaId::Contour,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::CauchySum => "cauchy-sum",
            LemmaId::DwpfSum => "dwpf-sum",
            LemmaId::OneOutU => "one-out-u",
            LemmaId::OneOutV => "one-out-v",
            LemmaId::Contour => "contour",
        }
    }
}

/// Parameters of one summation-identity instance.
#[derive(Debug, Clone, PartialEq)]
pub enum LemmaCase<T> {
    /// `#w = #u + #v`; partitions `w ⇒ {w_α, w_ᾱ}` with `#w_α = #u`.
    CauchySum {
        w: VarSet<T>,
        u: VarSet<T>,
        v: VarSet<T>,
    },
    /// `#w = #u + #v`; partitions `w ⇒ {w_α, w_ᾱ}` with `#w_α = #u`.
    DwpfSum {
        w: VarSet<T>,
        u: VarSet<T>,
        v: VarSet<T>,
    },
    /// `#u = #v`; partitions `u ⇒ {u_α, u_ᾱ}` with `#u_α = 1`.
    OneOutU { u: VarSet<T>, v: VarSet<T>, xi: T },
    /// `#u = #v`; partitions `v ⇒ {v_α, v_ᾱ}` with `#v_α = 1`.
    OneOutV { u: VarSet<T>, v: VarSet<T>, xi: T },
    /// Partitions `γ ⇒ {γ_σ, γ_ρ}` with `#γ_ρ = 1`.
    Contour { gamma: VarSet<T>, tau: T, x: T },
}

impl<T: Scalar> LemmaCase<T> {
    pub fn id(&self) -> LemmaId {
        match self {
            LemmaCase::CauchySum { .. } => LemmaId::CauchySum,
            LemmaCase::DwpfSum { .. } => LemmaId::DwpfSum,
            LemmaCase::OneOutU { .. } => LemmaId::OneOutU,
            LemmaCase::OneOutV { .. } => LemmaId::OneOutV,
            LemmaCase::Contour { .. } => LemmaId::Contour,
        }
    }

    /// Brute-force partition sum (left side).
    pub fn brute_force(&self, c: &Coupling<T>) -> Result<(T, usize, String)> {
        let mut acc = T::zero();
        let mut digests: Vec<Vec<usize>> = Vec::new();
        match self {
            LemmaCase::CauchySum { w, u, v } => {
                check_sizes(w, u.len() + v.len())?;
                for sp in w.splits(&[u.len(), v.len()])? {
                    let (wa, wb) = (sp.part(0), sp.part(1));
                    acc += &(c.g_set(wa, u)? * c.g_set(wb, v)? * c.g_set(wb, wa)?);
                    digests.push(sp.indices(0).to_vec());
                }
            }
            LemmaCase::DwpfSum { w, u, v } => {
                check_sizes(w, u.len() + v.len())?;
                for sp in w.splits(&[u.len(), v.len()])? {
                    let (wa, wb) = (sp.part(0), sp.part(1));
                    acc += &(partition_function(wa, u, c)?
                        * partition_function(v, wb, c)?
                        * c.f_set(wb, wa)?);
                    digests.push(sp.indices(0).to_vec());
                }
            }
            LemmaCase::OneOutU { u, v, xi } => {
                check_sizes(u, v.len())?;
                if u.is_empty() {
                    return Ok((acc, 0, split_digest([])));
                }
                for sp in u.splits(&[1, u.len() - 1])? {
                    let (ua, ub) = (sp.part(0), sp.part(1));
                    let arg = with(ub, xi.clone());
                    acc += &(partition_function(v, &arg, c)?
                        * c.g_set(ua, std::slice::from_ref(xi))?
                        * c.f_set(ub, ua)?);
                    digests.push(sp.indices(0).to_vec());
                }
            }
            LemmaCase::OneOutV { u, v, xi } => {
                check_sizes(u, v.len())?;
                if v.is_empty() {
                    return Ok((acc, 0, split_digest([])));
                }
                for sp in v.splits(&[1, v.len() - 1])? {
                    let (va, vb) = (sp.part(0), sp.part(1));
                    let arg = with(vb, xi.clone());
                    acc += &(partition_function(&arg, u, c)?
                        * c.g_set(va, std::slice::from_ref(xi))?
                        * c.f_set(va, vb)?);
                    digests.push(sp.indices(0).to_vec());
                }
            }
            LemmaCase::Contour { gamma, tau, x } => {
                if gamma.is_empty() {
                    return Ok((acc, 0, split_digest([])));
                }
                for sp in gamma.splits(&[1, gamma.len() - 1])? {
                    let (rho, sigma) = (sp.part(0), sp.part(1));
                    acc += &(c.f_set(rho, sigma)?
                        * c.g_set(std::slice::from_ref(tau), rho)?
                        * c.g_set(std::slice::from_ref(x), rho)?);
                    digests.push(sp.indices(0).to_vec());
                }
            }
        }
        let terms = digests.len();
        Ok((acc, terms, split_digest(digests.iter().map(Vec::as_slice))))
    }

    /// Closed form (right side).
    pub fn closed_form(&self, c: &Coupling<T>) -> Result<T> {
        match self {
            LemmaCase::CauchySum { w, u, v } => {
                (c.g_set(w, u)? * c.g_set(w, v)?).checked_quot(&c.g_set(u, v)?)
            }
            LemmaCase::DwpfSum { w, u, v } => {
                let mut arg = shifted(u, &-c.value().clone());
                arg.extend_from_slice(v);
                Ok(T::sign(u.len()) * c.f_set(w, u)? * partition_function(&arg, w, c)?)
            }
            LemmaCase::OneOutU { u, v, xi } => {
                let x = std::slice::from_ref(xi);
                Ok((c.f_set(u, x)? - c.f_set(v, x)?) * partition_function(v, u, c)?)
            }
            LemmaCase::OneOutV { u, v, xi } => {
                let x = std::slice::from_ref(xi);
                Ok((c.f_set(x, u)? - c.f_set(x, v)?) * partition_function(v, u, c)?)
            }
            LemmaCase::Contour { gamma, tau, x } => {
                let t = std::slice::from_ref(tau);
                let xs = std::slice::from_ref(x);
                Ok(c.g(x, tau)? * (c.f_set(t, gamma)? - c.f_set(xs, gamma)?))
            }
        }
    }
}

fn check_sizes<T>(w: &[T], expected: usize) -> Result<()> {
    if w.len() != expected {
        return Err(Error::SizeMismatch {
            sizes: vec![expected],
            len: w.len(),
        });
    }
    Ok(())
}

/// Compares the brute-force partition sum against the closed form exactly.
pub fn lemma_sum_check<T: Scalar>(case: &LemmaCase<T>, c: &Coupling<T>) -> Result<CheckReport> {
    let (lhs, terms, digest) = case.brute_force(c)?;
    let rhs = case.closed_form(c)?;
    if lhs != rhs {
        return Err(Error::check(
            case.id().name(),
            format!("sum = {lhs}, closed form = {rhs}, {terms} terms, splits {digest}"),
        ));
    }
    Ok(CheckReport::new(case.id().name(), terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn r(p: i64, q: i64) -> Rat {
        Rat::ratio(p, q)
    }

    fn one() -> Coupling<Rat> {
        Coupling::new(r(1, 1)).unwrap()
    }

    fn set(xs: &[(i64, i64)]) -> VarSet<Rat> {
        VarSet::new(xs.iter().map(|&(p, q)| r(p, q)).collect()).unwrap()
    }

    /// Literal determinant formula with the prefactor kept outside:
    /// `Δ'Δ h(u,v) det[g/h]`, determinant by cofactor expansion.
    fn k_literal(u: &[Rat], v: &[Rat], c: &Coupling<Rat>) -> Rat {
        let n = u.len();
        let mut du = r(1, 1);
        let mut dv = r(1, 1);
        for j in 0..n {
            for k in 0..n {
                if j < k {
                    du *= &c.g(&u[j], &u[k]).unwrap();
                }
                if j > k {
                    dv *= &c.g(&v[j], &v[k]).unwrap();
                }
            }
        }
        let m: Vec<Vec<Rat>> = u
            .iter()
            .map(|a| v.iter().map(|b| c.g(a, b).unwrap() / c.h(a, b)).collect())
            .collect();
        du * dv * c.h_set(u, v) * cofactor_det(&m)
    }

    fn cofactor_det(m: &[Vec<Rat>]) -> Rat {
        if m.is_empty() {
            return r(1, 1);
        }
        let mut acc = r(0, 1);
        for (k, a) in m[0].iter().enumerate() {
            let minor: Vec<Vec<Rat>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(l, _)| l != k)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            acc += &(Rat::sign(k) * a.clone() * cofactor_det(&minor));
        }
        acc
    }

    #[test]
    fn empty_and_single() {
        let c = one();
        assert_eq!(partition_function::<Rat>(&[], &[], &c).unwrap(), r(1, 1));
        assert_eq!(
            partition_function(&[r(2, 1)], &[r(0, 1)], &c).unwrap(),
            r(1, 2)
        );
    }

    #[test]
    fn two_by_two_against_literal_formula() {
        let c = one();
        let u = [r(5, 1), r(2, 1)];
        let v = [r(0, 1), r(1, 1)];
        // Δ' = g(5,2) = 1/3, Δ = g(1,0) = 1, h(u,v) = 6·5·3·2 = 180,
        // det[g/h] = (1/30)(1/2) - (1/20)(1/6) = 1/120, so K = 1/2.
        let k = partition_function(&u, &v, &c).unwrap();
        assert_eq!(k, r(1, 2));
        assert_eq!(k, k_literal(&u, &v, &c));
    }

    #[test]
    fn agrees_with_literal_formula_off_the_h_zeros() {
        let c = Coupling::new(r(3, 2)).unwrap();
        let u = [r(7, 3), r(-5, 2), r(11, 4)];
        let v = [r(1, 5), r(-9, 7), r(13, 6)];
        assert_eq!(
            partition_function(&u, &v, &c).unwrap(),
            k_literal(&u, &v, &c)
        );
    }

    #[test]
    fn delta_products_examples() {
        let c = one();
        assert_eq!(
            delta_products(&[r(4, 1)], &[r(9, 1)], &c).unwrap(),
            (r(1, 1), r(1, 1))
        );
        let (du, dv) = delta_products(&[r(3, 1), r(1, 1)], &[r(3, 1), r(1, 1)], &c).unwrap();
        assert_eq!(du, r(1, 2));
        assert_eq!(dv, r(-1, 2));
        assert!(delta_products(&[r(1, 1), r(1, 1)], &[], &c).is_err());
    }

    #[test]
    fn pole_and_size_errors() {
        let c = one();
        assert!(matches!(
            partition_function(&[r(1, 1)], &[r(1, 1)], &c),
            Err(Error::Pole { .. })
        ));
        assert!(matches!(
            partition_function(&[r(1, 1)], &[], &c),
            Err(Error::SizeMismatch { .. })
        ));
        // u - v + c = 0 is not a pole
        assert_eq!(
            partition_function(&[r(0, 1)], &[r(1, 1)], &c).unwrap(),
            r(-1, 1)
        );
    }

    #[test]
    fn shift_n0_case() {
        let c = one();
        let z = r(7, 3);
        let k = partition_function(&[z.clone() - r(1, 1)], std::slice::from_ref(&z), &c).unwrap();
        assert_eq!(k, r(-1, 1));
        shift_properties_check::<Rat>(&[], &[], &z, &c).unwrap();
    }

    #[test]
    fn shift_properties_small() {
        let c = Coupling::new(r(2, 3)).unwrap();
        shift_properties_check(&[r(5, 2)], &[r(-1, 3)], &r(7, 4), &c).unwrap();
        shift_properties_check(&[r(5, 2), r(-3, 1)], &[r(-1, 3), r(9, 5)], &r(7, 4), &c).unwrap();
    }

    #[test]
    fn residue_reconstruction() {
        let c = one();
        let rep = residue_check(&[r(3, 2)], &[r(-2, 5)], &c).unwrap();
        assert_eq!(rep.residues, vec![r(1, 1)]);
        assert_eq!(rep.numerator_degree, Some(0));
        let rep = residue_check(&[r(3, 2), r(-7, 3)], &[r(-2, 5), r(8, 3)], &c).unwrap();
        assert!(rep.numerator_degree.unwrap() <= 1);
    }

    #[test]
    fn cauchy_examples() {
        let c = one();
        cauchy_determinant_check(&[r(4, 1)], &[r(0, 1)], &c).unwrap();
        cauchy_determinant_check(&[r(4, 1), r(1, 1)], &[r(0, 1), r(2, 1)], &c).unwrap();
        cauchy_determinant_check(
            &[r(4, 1), r(1, 3), r(-5, 2)],
            &[r(0, 1), r(2, 1), r(7, 8)],
            &c,
        )
        .unwrap();
    }

    #[test]
    fn lemma_examples() {
        let c = one();
        // two-term sum against g(w,u) g(w,v) / g(u,v)
        let case = LemmaCase::CauchySum {
            w: set(&[(3, 1), (7, 2)]),
            u: set(&[(-1, 3)]),
            v: set(&[(5, 4)]),
        };
        let w = [r(3, 1), r(7, 2)];
        let (u, v) = (r(-1, 3), r(5, 4));
        let g = |a: &Rat, b: &Rat| c.g(a, b).unwrap();
        let by_hand = g(&w[0], &u) * g(&w[1], &v) * g(&w[1], &w[0])
            + g(&w[1], &u) * g(&w[0], &v) * g(&w[0], &w[1]);
        let (lhs, terms, _) = case.brute_force(&c).unwrap();
        assert_eq!((lhs.clone(), terms), (by_hand, 2));
        assert_eq!(lhs, case.closed_form(&c).unwrap());

        // single term: K(w|u) = -f(w,u) K(u-c|w)
        let case = LemmaCase::DwpfSum {
            w: set(&[(9, 4)]),
            u: set(&[(-2, 3)]),
            v: VarSet::empty(),
        };
        assert_eq!(lemma_sum_check(&case, &c).unwrap().terms, 1);

        // n = 1: (f(u,ξ) - f(v,ξ)) K(v|u)
        let case = LemmaCase::OneOutU {
            u: set(&[(1, 2)]),
            v: set(&[(8, 3)]),
            xi: r(-5, 4),
        };
        assert_eq!(lemma_sum_check(&case, &c).unwrap().terms, 1);
    }

    #[test]
    fn lemma_failure_reports_both_sides() {
        let c = one();
        let case = LemmaCase::Contour {
            gamma: set(&[(1, 1), (3, 1)]),
            tau: r(5, 1),
            x: r(7, 1),
        };
        lemma_sum_check(&case, &c).unwrap();
        // the same sum against the wrong coupling in the closed form only
        let (lhs, _, _) = case.brute_force(&c).unwrap();
        let rhs = case.closed_form(&Coupling::new(r(2, 1)).unwrap()).unwrap();
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn inverse_h_rewrites() {
        inverse_h_check(&r(3, 7), &r(-2, 5), &one()).unwrap();
    }

    #[test]
    fn permutation_enumeration() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(3)[1], vec![0, 2, 1]);
    }
}
