//! Monodromy matrix of the inhomogeneous fundamental chain and the operator
//! products built from its entries.
//!
//! `T(u) = R_{0L}(u, ξ_L) ··· R_{01}(u, ξ_1)` acts on `V_0 ⊗ H` with the
//! auxiliary space as the first tensor factor. The entry `T_ij(u)` is the
//! `(i, j)` auxiliary block times the sign fixed by [`OddSign`].

use std::sync::{Arc, Mutex};

use crate::check::{expect_matrix, expect_vector, CheckReport};
use crate::error::{Error, Result};
use crate::graded::{grade, r_matrix_at, GMatrix, N};
use crate::linalg::nullspace;
use crate::scalar::{Coupling, Scalar};
use crate::varsets::VarSet;

/// Sign attached to the auxiliary blocks when reading off `T_ij`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OddSign {
    /// The raw block.
    Plain,
    /// `(-1)^{([i]+[j])[j]}` times the block.
    Koszul,
    /// `(-1)^{([i]+[j])[i]}` times the block; flips every odd entry relative
    /// to [`OddSign::Koszul`].
    Flipped,
}

impl OddSign {
    pub const ALL: [OddSign; 3] = [OddSign::Plain, OddSign::Koszul, OddSign::Flipped];

    pub fn name(self) -> &'static str {
        match self {
            OddSign::Plain => "plain",
            OddSign::Koszul => "koszul",
            OddSign::Flipped => "flipped",
        }
    }

    fn exponent(self, i: usize, j: usize) -> usize {
        let odd = grade(i) + grade(j);
        match self {
            OddSign::Plain => 0,
            OddSign::Koszul => odd * grade(j),
            OddSign::Flipped => odd * grade(i),
        }
    }
}

/// Order of the R-matrix factors in the monodromy product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AuxOrder {
    /// `R_{0L} ··· R_{01}`
    Descending,
    /// `R_{01} ··· R_{0L}`
    Ascending,
}

/// Chain length, inhomogeneities and coupling, plus the two conventions.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainSpec<T> {
    pub xi: VarSet<T>,
    pub c: Coupling<T>,
    pub sign: OddSign,
    pub order: AuxOrder,
}

impl<T: Scalar> ChainSpec<T> {
    pub fn new(xi: VarSet<T>, c: Coupling<T>) -> Result<Self> {
        if xi.is_empty() {
            return Err(Error::Config("a chain needs at least one site".into()));
        }
        Ok(ChainSpec {
            xi,
            c,
            sign: OddSign::Koszul,
            order: AuxOrder::Descending,
        })
    }

    pub fn with_sign(mut self, sign: OddSign) -> Self {
        self.sign = sign;
        self
    }

    pub fn with_order(mut self, order: AuxOrder) -> Self {
        self.order = order;
        self
    }

    pub fn sites(&self) -> usize {
        self.xi.len()
    }

    /// Product of `R_{a,k}(u, ξ)` over the quantum factors `first..first+L`
    /// of a `total`-site space, auxiliary space at factor `a`.
    fn row_product(&self, u: &T, a: usize, first: usize, total: usize) -> Result<GMatrix<T>> {
        let mut t = GMatrix::identity(total);
        for (k, xi) in self.xi.iter().enumerate() {
            let r = r_matrix_at(u, xi, &self.c, a, first + k, total)?;
            t = match self.order {
                AuxOrder::Descending => &r * &t,
                AuxOrder::Ascending => &t * &r,
            };
        }
        Ok(t)
    }
}

/// The nine entries `T_ij(u)` at one spectral point.
#[derive(Debug, Clone, PartialEq)]
pub struct Entries<T>(Vec<GMatrix<T>>);

impl<T: Scalar> Entries<T> {
    /// `T_ij` with 1-based indices.
    pub fn get(&self, i: usize, j: usize) -> &GMatrix<T> {
        &self.0[(i - 1) * N + (j - 1)]
    }
}

/// `T(u)` on `V_0 ⊗ H` split into its nine quantum-space entries.
pub fn build_monodromy<T: Scalar>(chain: &ChainSpec<T>, u: &T) -> Result<Entries<T>> {
    let l = chain.sites();
    let full = chain.row_product(u, 0, 1, l + 1)?;
    let mut out = Vec::with_capacity(N * N);
    for i in 1..=N {
        for j in 1..=N {
            let block = full.aux_block(i - 1, j - 1);
            out.push(if chain.sign.exponent(i, j) % 2 == 1 {
                block.scaled(&-T::one())
            } else {
                block
            });
        }
    }
    Ok(Entries(out))
}

/// Which family of symmetric odd products.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OddKind {
    /// `T_j3`
    Col,
    /// `T_3k`
    Row,
}

impl OddKind {
    /// `(i, j)` of the underlying entry.
    pub fn entry(self, index: usize) -> (usize, usize) {
        match self {
            OddKind::Col => (index, 3),
            OddKind::Row => (3, index),
        }
    }
}

/// A chain with memoized monodromy entries.
#[derive(Debug)]
pub struct Monodromy<T> {
    chain: ChainSpec<T>,
    cache: Mutex<Vec<(T, Arc<Entries<T>>)>>,
}

impl<T: Scalar> Monodromy<T> {
    pub fn new(chain: ChainSpec<T>) -> Self {
        Monodromy {
            chain,
            cache: Mutex::new(Vec::new()),
        }
    }

    pub fn chain(&self) -> &ChainSpec<T> {
        &self.chain
    }

    pub fn coupling(&self) -> &Coupling<T> {
        &self.chain.c
    }

    pub fn sites(&self) -> usize {
        self.chain.sites()
    }

    pub fn identity(&self) -> GMatrix<T> {
        GMatrix::identity(self.sites())
    }

    pub fn entries(&self, u: &T) -> Result<Arc<Entries<T>>> {
        if let Some((_, e)) = self.cache.lock().unwrap().iter().find(|(x, _)| x == u) {
            return Ok(Arc::clone(e));
        }
        let e = Arc::new(build_monodromy(&self.chain, u)?);
        self.cache.lock().unwrap().push((u.clone(), Arc::clone(&e)));
        Ok(e)
    }

    /// `T_ij(u)`, 1-based indices.
    pub fn t(&self, i: usize, j: usize, u: &T) -> Result<GMatrix<T>> {
        check_index(i)?;
        check_index(j)?;
        Ok(self.entries(u)?.get(i, j).clone())
    }

    /// `T_ij(u_1) ··· T_ij(u_n)` in the given order; identity when empty.
    pub fn ordered_product(&self, i: usize, j: usize, us: &[T]) -> Result<GMatrix<T>> {
        let mut acc = self.identity();
        for u in us {
            acc = &acc * self.entries(u)?.get(i, j);
        }
        Ok(acc)
    }

    /// `T_ij(u)` for an even entry, a product of mutually commuting factors.
    pub fn even_set_product(&self, i: usize, j: usize, us: &[T]) -> Result<GMatrix<T>> {
        check_index(i)?;
        check_index(j)?;
        if (grade(i) + grade(j)) % 2 == 1 {
            return Err(Error::Parity {
                i,
                j,
                context: "an even set product",
            });
        }
        self.ordered_product(i, j, us)
    }

    /// `𝕋_j3(v) = T_j3(v_1)···T_j3(v_n) / prod_{l>m} h(v_l, v_m)` and
    /// `𝕋_3k(v) = T_3k(v_1)···T_3k(v_n) / prod_{l>m} h(v_m, v_l)`.
    pub fn sym_odd_product(&self, kind: OddKind, index: usize, vs: &[T]) -> Result<GMatrix<T>> {
        let denom = self.sym_denominator(kind, index, vs)?;
        let (i, j) = kind.entry(index);
        let prod = self.ordered_product(i, j, vs)?;
        Ok(prod.scaled(&(T::one() / denom)))
    }

    /// The triangular `h`-product dividing a symmetric odd product.
    pub fn sym_denominator(&self, kind: OddKind, index: usize, vs: &[T]) -> Result<T> {
        if index != 1 && index != 2 {
            return Err(Error::Range {
                what: "odd product index",
                index,
                bound: 3,
            });
        }
        let c = self.coupling();
        let mut denom = T::one();
        for l in 0..vs.len() {
            for m in 0..l {
                let (x, y) = match kind {
                    OddKind::Col => (&vs[l], &vs[m]),
                    OddKind::Row => (&vs[m], &vs[l]),
                };
                let h = c.h(x, y);
                if h.is_zero() {
                    return Err(Error::pole("1/h", x, y));
                }
                denom *= &h;
            }
        }
        Ok(denom)
    }

    /// `𝕋_j3(v)`
    pub fn sym_col(&self, j: usize, vs: &[T]) -> Result<GMatrix<T>> {
        self.sym_odd_product(OddKind::Col, j, vs)
    }

    /// `𝕋_3k(v)`
    pub fn sym_row(&self, k: usize, vs: &[T]) -> Result<GMatrix<T>> {
        self.sym_odd_product(OddKind::Row, k, vs)
    }

    /// `Ω = e_1 ⊗ ··· ⊗ e_1`
    pub fn vacuum(&self) -> Vec<T> {
        let mut v = vec![T::zero(); self.identity().dim()];
        v[0] = T::one();
        v
    }

    /// `λ_i(u)` read off from `T_ii(u) Ω`.
    pub fn lambda(&self, i: usize, u: &T) -> Result<T> {
        check_index(i)?;
        let e = self.entries(u)?;
        Ok(e.get(i, i).apply(&self.vacuum())[0].clone())
    }

    /// `T_ij(u) Ω = 0` for `i > j` and `T_ii(u) Ω = λ_i(u) Ω`.
    pub fn vacuum_check(&self, u: &T) -> Result<CheckReport> {
        let omega = self.vacuum();
        let zero = vec![T::zero(); omega.len()];
        let e = self.entries(u)?;
        for i in 1..=N {
            for j in 1..=N {
                let image = e.get(i, j).apply(&omega);
                if i > j {
                    expect_vector(&format!("T_{i}{j}(u) Ω = 0"), &image, &zero)?;
                } else if i == j {
                    let lam = image[0].clone();
                    let expect: Vec<T> = omega.iter().map(|x| x.clone() * lam.clone()).collect();
                    expect_vector(&format!("T_{i}{i}(u) Ω = λ_{i}(u) Ω"), &image, &expect)?;
                }
            }
        }
        Ok(CheckReport::new("vacuum", 6))
    }

    /// Row vector annihilated by every `T_ij`, `i < j`, at a few sample points
    /// away from the inhomogeneities, normalized to `Ω† Ω = 1`.
    pub fn dual_vacuum(&self) -> Result<Vec<T>> {
        let dim = self.identity().dim();
        let mut far = T::one();
        for x in self.chain.xi.iter() {
            let a = if *x < T::zero() {
                -x.clone()
            } else {
                x.clone()
            };
            while far <= a {
                far = far + T::one();
            }
        }
        let c = self.coupling().value();
        let c_abs = if *c < T::zero() {
            -c.clone()
        } else {
            c.clone()
        };
        while far <= c_abs {
            far = far + T::one();
        }
        let mut rows = Vec::new();
        for s in 1..=3 {
            let u = far.clone() + T::from_int(s);
            let e = self.entries(&u)?;
            for (i, j) in [(1, 2), (1, 3), (2, 3)] {
                // w T = 0, one equation per column of T
                let m = e.get(i, j);
                let mut cols = vec![vec![T::zero(); dim]; dim];
                for (r, col, x) in m.entries() {
                    cols[col][r] = x.clone();
                }
                rows.extend(cols.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
            }
        }
        let basis = nullspace(rows, dim);
        if basis.len() != 1 {
            return Err(Error::check(
                "one-dimensional dual vacuum",
                format!("solution space has dimension {}", basis.len()),
            ));
        }
        let w = basis.into_iter().next().unwrap();
        let norm = w[0].clone();
        if norm.is_zero() {
            return Err(Error::check("dual vacuum pairs with Ω", "Ω† Ω = 0"));
        }
        Ok(w.into_iter().map(|x| x / norm.clone()).collect())
    }

    /// `Ω† T_ij(u) = 0` for `i < j` and `Ω† T_ii(u) = λ_i(u) Ω†` with the same
    /// `λ_i` as on `Ω`.
    pub fn dual_vacuum_check(&self, dual: &[T], u: &T) -> Result<CheckReport> {
        let zero = vec![T::zero(); dual.len()];
        let e = self.entries(u)?;
        for i in 1..=N {
            for j in 1..=N {
                let image = e.get(i, j).left_apply(dual);
                if i < j {
                    expect_vector(&format!("Ω† T_{i}{j}(u) = 0"), &image, &zero)?;
                } else if i == j {
                    let lam = self.lambda(i, u)?;
                    let expect: Vec<T> = dual.iter().map(|x| x.clone() * lam.clone()).collect();
                    expect_vector(&format!("Ω† T_{i}{i}(u) = λ_{i}(u) Ω†"), &image, &expect)?;
                }
            }
        }
        Ok(CheckReport::new("dual vacuum", 6))
    }

    /// Every nonzero entry of `T_ij(u)` connects basis tensors whose total
    /// parities differ by `[i] + [j]`.
    pub fn parity_check(&self, u: &T) -> Result<CheckReport> {
        let e = self.entries(u)?;
        let l = self.sites();
        let total = |mut x: usize| {
            let mut p = 0;
            for _ in 0..l {
                p += usize::from(x % N == 2);
                x /= N;
            }
            p
        };
        for i in 1..=N {
            for j in 1..=N {
                let want = (grade(i) + grade(j)) % 2;
                if let Some((r, c, _)) = e
                    .get(i, j)
                    .entries()
                    .find(|&(r, c, _)| (total(r) + total(c)) % 2 != want)
                {
                    return Err(Error::check(
                        format!("parity of T_{i}{j}"),
                        format!("entry ({r}, {c}) has the wrong parity"),
                    ));
                }
            }
        }
        Ok(CheckReport::new("entry parity", 9))
    }

    /// Left side and the two exchange forms of `[T_ij(u), T_kl(v)}`.
    fn commutator_sides(
        &self,
        (i, j, k, l): (usize, usize, usize, usize),
        u: &T,
        v: &T,
    ) -> Result<[GMatrix<T>; 3]> {
        for x in [i, j, k, l] {
            check_index(x)?;
        }
        let g = self.coupling().g(u, v)?;
        let (eu, ev) = (self.entries(u)?, self.entries(v)?);
        let (pi, pj, pk, pl) = (grade(i), grade(j), grade(k), grade(l));
        let lhs = &(eu.get(i, j) * ev.get(k, l))
            - &(ev.get(k, l) * eu.get(i, j)).scaled(&T::sign((pi + pj) * (pk + pl)));
        let first = (&(ev.get(k, j) * eu.get(i, l)) - &(eu.get(k, j) * ev.get(i, l)))
            .scaled(&(T::sign(pi * (pk + pl) + pk * pl) * g.clone()));
        let second = (&(eu.get(i, l) * ev.get(k, j)) - &(ev.get(i, l) * eu.get(k, j)))
            .scaled(&(T::sign(pl * (pi + pj) + pi * pj) * g));
        Ok([lhs, first, second])
    }

    /// `[T_ij(u), T_kl(v)}` against both exchange forms.
    pub fn graded_commutator_check(
        &self,
        q: (usize, usize, usize, usize),
        u: &T,
        v: &T,
    ) -> Result<CheckReport> {
        let (i, j, k, l) = q;
        let [lhs, first, second] = self.commutator_sides(q, u, v)?;
        expect_matrix(
            &format!("[T_{i}{j}(u), T_{k}{l}(v)}} in the T_kj T_il form"),
            &lhs,
            &first,
        )?;
        expect_matrix(
            &format!("[T_{i}{j}(u), T_{k}{l}(v)}} in the T_il T_kj form"),
            &lhs,
            &second,
        )?;
        Ok(CheckReport::new("graded commutator", 2))
    }

    /// `h(v1,v2) T_j3(v1) T_j3(v2) = h(v2,v1) T_j3(v2) T_j3(v1)` and
    /// `h(v2,v1) T_3j(v1) T_3j(v2) = h(v1,v2) T_3j(v2) T_3j(v1)` for `j = 1, 2`.
    ///
    /// The note records whether the variant with the same operator order on
    /// both sides also holds.
    pub fn odd_exchange_check(&self, v1: &T, v2: &T) -> Result<CheckReport> {
        let c = self.coupling();
        let (h12, h21) = (c.h(v1, v2), c.h(v2, v1));
        let mut same_order_holds = true;
        for j in 1..=2 {
            let a = &self.t(j, 3, v1)? * &self.t(j, 3, v2)?;
            let b = &self.t(j, 3, v2)? * &self.t(j, 3, v1)?;
            expect_matrix(
                &format!("h(v1,v2) T_{j}3(v1)T_{j}3(v2) = h(v2,v1) T_{j}3(v2)T_{j}3(v1)"),
                &a.scaled(&h12),
                &b.scaled(&h21),
            )?;
            same_order_holds &= a.scaled(&h12) == a.scaled(&h21);

            let a = &self.t(3, j, v1)? * &self.t(3, j, v2)?;
            let b = &self.t(3, j, v2)? * &self.t(3, j, v1)?;
            expect_matrix(
                &format!("h(v2,v1) T_3{j}(v1)T_3{j}(v2) = h(v1,v2) T_3{j}(v2)T_3{j}(v1)"),
                &a.scaled(&h21),
                &b.scaled(&h12),
            )?;
        }
        let verdict = if same_order_holds { "holds" } else { "fails" };
        Ok(CheckReport::new("odd exchange", 4).with_note(format!("same-order reading {verdict}")))
    }
}

fn check_index(i: usize) -> Result<()> {
    if (1..=N).contains(&i) {
        Ok(())
    } else {
        Err(Error::Range {
            what: "matrix index",
            index: i,
            bound: N + 1,
        })
    }
}

/// `R_{ab}(u,v) T_a(u) T_b(v) = T_b(v) T_a(u) R_{ab}(u,v)` on `V_a ⊗ V_b ⊗ H`.
pub fn rtt_check<T: Scalar>(chain: &ChainSpec<T>, u: &T, v: &T) -> Result<CheckReport> {
    let total = chain.sites() + 2;
    let r = r_matrix_at(u, v, &chain.c, 0, 1, total)?;
    let ta = chain.row_product(u, 0, 2, total)?;
    let tb = chain.row_product(v, 1, 2, total)?;
    let lhs = &(&r * &ta) * &tb;
    let rhs = &(&tb * &ta) * &r;
    expect_matrix("RTT", &lhs, &rhs)?;
    Ok(CheckReport::new("RTT", 1))
}

/// Number of index quadruples failing each exchange form, per sign
/// convention: `(convention, first-form failures, second-form failures)`.
pub fn sign_convention_survey<T: Scalar>(
    chain: &ChainSpec<T>,
    u: &T,
    v: &T,
) -> Result<Vec<(OddSign, usize, usize)>> {
    let mut out = Vec::new();
    for sign in OddSign::ALL {
        let m = Monodromy::new(chain.clone().with_sign(sign));
        let (mut bad1, mut bad2) = (0, 0);
        for q in quadruples() {
            let [lhs, first, second] = m.commutator_sides(q, u, v)?;
            bad1 += usize::from(lhs != first);
            bad2 += usize::from(lhs != second);
        }
        out.push((sign, bad1, bad2));
    }
    Ok(out)
}

/// All 81 index quadruples `(i, j, k, l)` in lexicographic order.
pub fn quadruples() -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::with_capacity(81);
    for i in 1..=N {
        for j in 1..=N {
            for k in 1..=N {
                for l in 1..=N {
                    out.push((i, j, k, l));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn r(p: i64, q: i64) -> Rat {
        Rat::ratio(p, q)
    }

    fn chain(xi: &[(i64, i64)]) -> ChainSpec<Rat> {
        let xi = VarSet::new(xi.iter().map(|&(p, q)| r(p, q)).collect()).unwrap();
        ChainSpec::new(xi, Coupling::new(r(1, 1)).unwrap()).unwrap()
    }

    #[test]
    fn single_site_entries() {
        let m = Monodromy::new(chain(&[(0, 1)]));
        let u = r(2, 1);
        assert_eq!(m.lambda(1, &u).unwrap(), r(3, 2));
        assert_eq!(m.lambda(2, &u).unwrap(), r(1, 1));
        assert_eq!(m.lambda(3, &u).unwrap(), r(1, 1));
        // T_ij = δ_ij + g(u, 0) · (±E_ji)
        let g = r(1, 2);
        for i in 1..=3 {
            for j in 1..=3 {
                let t = m.t(i, j, &u).unwrap();
                let mut off = t.clone();
                if i == j {
                    off = &off - &GMatrix::identity(1);
                }
                assert_eq!(off.nnz(), 1);
                let x = off.get(j - 1, i - 1);
                assert!(x == g || x == -g.clone(), "T_{i}{j}");
            }
        }
        assert!(matches!(m.t(1, 1, &r(0, 1)), Err(Error::Pole { .. })));
    }

    #[test]
    fn two_site_vacuum() {
        let m = Monodromy::new(chain(&[(0, 1), (3, 7)]));
        let u = r(5, 3);
        let om = m.vacuum();
        assert!(m
            .t(2, 1, &u)
            .unwrap()
            .apply(&om)
            .iter()
            .all(|x| x == &r(0, 1)));
        m.vacuum_check(&u).unwrap();
        let dual = m.dual_vacuum().unwrap();
        assert_eq!(dual, om);
        m.dual_vacuum_check(&dual, &u).unwrap();
        m.parity_check(&u).unwrap();
    }

    #[test]
    fn rtt_small() {
        let ch = chain(&[(0, 1), (3, 7)]);
        rtt_check(&ch, &r(5, 3), &r(-2, 5)).unwrap();
        rtt_check(&ch, &r(-2, 5), &r(5, 3)).unwrap();
        rtt_check(&chain(&[(1, 2)]), &r(5, 3), &r(-2, 5)).unwrap();
    }

    #[test]
    fn commutators_all_quadruples() {
        let m = Monodromy::new(chain(&[(0, 1), (3, 7)]));
        for q in quadruples() {
            m.graded_commutator_check(q, &r(5, 3), &r(-2, 5)).unwrap();
        }
        assert!(m
            .t(1, 1, &r(5, 3))
            .map(|a| &(&a * &a) - &(&a * &a))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn sign_survey() {
        let survey =
            sign_convention_survey(&chain(&[(0, 1), (3, 7)]), &r(5, 3), &r(-2, 5)).unwrap();
        let find = |s| survey.iter().find(|x| x.0 == s).copied().unwrap();
        assert_eq!(find(OddSign::Koszul), (OddSign::Koszul, 0, 0));
        assert_eq!(find(OddSign::Flipped), (OddSign::Flipped, 0, 0));
        let plain = find(OddSign::Plain);
        assert!(plain.1 > 0 && plain.2 > 0);
    }

    #[test]
    fn symmetric_odd_products() {
        let m = Monodromy::new(chain(&[(0, 1), (3, 7)]));
        let (v1, v2) = (r(11, 4), r(-9, 5));
        assert_eq!(
            m.sym_col(1, std::slice::from_ref(&v1)).unwrap(),
            m.t(1, 3, &v1).unwrap()
        );
        assert_eq!(
            m.sym_col(1, &[v1.clone(), v2.clone()]).unwrap(),
            m.sym_col(1, &[v2.clone(), v1.clone()]).unwrap()
        );
        assert_eq!(
            m.sym_row(2, &[v1.clone(), v2.clone()]).unwrap(),
            m.sym_row(2, &[v2.clone(), v1.clone()]).unwrap()
        );
        let rep = m.odd_exchange_check(&v1, &v2).unwrap();
        assert_eq!(rep.notes, vec!["same-order reading fails".to_string()]);
        assert!(matches!(
            m.sym_col(1, &[r(0, 1), r(1, 1)]),
            Err(Error::Pole { .. })
        ));
    }

    #[test]
    fn odd_square_on_one_site() {
        let m = Monodromy::new(chain(&[(0, 1)]));
        let t = m.t(1, 3, &r(7, 2)).unwrap();
        assert!((&t * &t).is_zero());
    }

    #[test]
    fn even_products_commute() {
        let m = Monodromy::new(chain(&[(0, 1), (3, 7)]));
        let (a, b) = (r(11, 4), r(-9, 5));
        assert_eq!(
            m.even_set_product(1, 2, &[a.clone(), b.clone()]).unwrap(),
            m.even_set_product(1, 2, &[b, a.clone()]).unwrap()
        );
        assert_eq!(m.even_set_product(1, 2, &[]).unwrap(), GMatrix::identity(2));
        assert_eq!(
            m.even_set_product(2, 2, std::slice::from_ref(&a)).unwrap(),
            m.t(2, 2, &a).unwrap()
        );
        assert!(matches!(
            m.even_set_product(1, 3, &[a]),
            Err(Error::Parity { .. })
        ));
    }

    #[test]
    fn ascending_order_is_also_a_representation() {
        let ch = chain(&[(0, 1), (3, 7)]).with_order(AuxOrder::Ascending);
        rtt_check(&ch, &r(5, 3), &r(-2, 5)).unwrap();
    }
}
