//! The group algebra kG of a finite p-group over F_p.
//!
//! Elements are length-|G| coefficient vectors indexed by group elements.
//! For a p-group the Jacobson radical J(kG) is the augmentation ideal; its
//! powers give the radical filtration, whose nilpotency index is cross-checked
//! against the Jennings formula m = 1 + (p-1) Σ i·e_i computed from the
//! dimension subgroups F_i = {g : g - 1 ∈ J^i}.

use crate::group::{min_generators, Group};
use crate::linalg::{FieldPrime, LinalgError, PrimeFieldMatrix, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("characteristic {field} does not match the {group} of a {prime}-group")]
    CharacteristicMismatch { field: u64, group: String, prime: u64 },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// kG for a finite p-group G, char k = p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebra {
    group: Group,
    field: FieldPrime,
}

impl GroupAlgebra {
    pub fn new(group: Group, field: FieldPrime) -> Result<Arc<Self>, AlgebraError> {
        if field.p() != group.prime() {
            return Err(AlgebraError::CharacteristicMismatch {
                field: field.p(),
                group: group.name().to_string(),
                prime: group.prime(),
            });
        }
        let alg = GroupAlgebra { group, field };
        alg.spot_check_associativity();
        Ok(Arc::new(alg))
    }

    /// Build kG with the canonical field F_p for G's prime.
    pub fn for_group(group: Group) -> Arc<Self> {
        let field = FieldPrime::new(group.prime()).expect("group primes are prime");
        Self::new(group, field).expect("characteristic matches by construction")
    }

    #[inline]
    pub fn group(&self) -> &Group {
        &self.group
    }

    #[inline]
    pub fn field(&self) -> FieldPrime {
        self.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.group.order()
    }

    /// Structural identity used to decide whether two algebras agree.
    pub fn same_algebra(&self, other: &GroupAlgebra) -> bool {
        self.field == other.field && self.group == other.group
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.dim()]
    }

    pub fn one(&self) -> Vec<u64> {
        let mut v = self.zero();
        v[self.group.identity()] = 1;
        v
    }

    pub fn basis_element(&self, g: usize) -> Vec<u64> {
        let mut v = self.zero();
        v[g] = 1;
        v
    }

    /// The norm element Σ_{g∈G} g; spans (kG)^G.
    pub fn norm_element(&self) -> Vec<u64> {
        vec![1; self.dim()]
    }

    pub fn multiply(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let n = self.dim();
        assert_eq!(x.len(), n);
        assert_eq!(y.len(), n);
        let f = self.field;
        let mut out = self.zero();
        for g in 0..n {
            if x[g] == 0 {
                continue;
            }
            for h in 0..n {
                if y[h] == 0 {
                    continue;
                }
                let t = self.group.mul(g, h);
                out[t] = f.add(out[t], f.mul(f.reduce(x[g]), f.reduce(y[h])));
            }
        }
        out
    }

    /// Matrix of left multiplication by `x` on kG (columns indexed by basis).
    pub fn left_mult_matrix(&self, x: &[u64]) -> PrimeFieldMatrix {
        let n = self.dim();
        let mut m = PrimeFieldMatrix::zeros(self.field, n, n);
        for h in 0..n {
            let col = self.multiply(x, &self.basis_element(h));
            for (r, &v) in col.iter().enumerate() {
                if v != 0 {
                    m.set(r, h, v);
                }
            }
        }
        m
    }

    pub fn augmentation(&self, x: &[u64]) -> u64 {
        let f = self.field;
        x.iter().fold(0, |acc, &v| f.add(acc, f.reduce(v)))
    }

    /// span{g - 1 : g ∈ G}; equals J(kG) for a p-group. Dimension |G| - 1.
    pub fn augmentation_ideal(&self) -> Subspace {
        let n = self.dim();
        let f = self.field;
        let vecs: Vec<Vec<u64>> = (1..n)
            .map(|g| {
                let mut v = self.zero();
                v[g] = 1;
                v[0] = f.neg(1);
                v
            })
            .collect();
        Subspace::from_vectors(f, n, &vecs)
    }

    /// Product span{x·y : x ∈ basis(a), y ∈ basis(b)} as a subspace of kG.
    pub fn subspace_product(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let vecs: Vec<Vec<u64>> = a
            .basis_vectors()
            .flat_map(|x| {
                b.basis_vectors()
                    .map(|y| self.multiply(&x, &y))
                    .collect::<Vec<_>>()
            })
            .collect();
        Subspace::from_vectors(self.field, self.dim(), &vecs)
    }

    /// J^0 ⊇ J^1 ⊇ ... ⊇ J^{m-1} ⊃ J^m = 0 and the nilpotency index m.
    pub fn radical_filtration(&self) -> RadicalFiltration {
        let j = self.augmentation_ideal();
        let mut powers = vec![Subspace::full(self.field, self.dim()), j.clone()];
        while !powers.last().unwrap().is_zero() {
            let next = self.subspace_product(powers.last().unwrap(), &j);
            assert!(
                next.dim() < powers.last().unwrap().dim(),
                "radical powers must strictly decrease until zero"
            );
            assert!(next.is_subspace_of(powers.last().unwrap()));
            powers.push(next);
        }
        let m = powers.len() - 1;
        RadicalFiltration { powers, nilpotency_index: m }
    }

    /// Dimension subgroups F_i = {g : g - 1 ∈ J^i} for i = 1.. until trivial,
    /// together with the Jennings exponents p^{e_i} = [F_i : F_{i+1}].
    ///
    /// The returned chain includes the final trivial subgroup, so it has one
    /// more entry than the exponent sequence.
    pub fn dimension_subgroups(&self, filtration: &RadicalFiltration) -> (Vec<Vec<usize>>, Vec<u32>) {
        let g = &self.group;
        let f = self.field;
        let mut chain: Vec<Vec<usize>> = Vec::new();
        loop {
            let i = chain.len() + 1;
            let ji = filtration.power(i);
            let members: Vec<usize> = g
                .elements()
                .filter(|&x| {
                    let mut v = self.zero();
                    v[x] = f.add(v[x], 1);
                    v[0] = f.sub(v[0], 1);
                    ji.contains(&v)
                })
                .collect();
            assert!(g.is_normal(&members), "dimension subgroup must be normal");
            if let Some(prev) = chain.last() {
                assert!(
                    members.iter().all(|m| prev.contains(m)),
                    "dimension subgroups must descend"
                );
            }
            let trivial = members == vec![g.identity()];
            chain.push(members);
            if trivial {
                break;
            }
        }
        let p = g.prime() as usize;
        let exponents: Vec<u32> = chain
            .windows(2)
            .map(|w| {
                let index = w[0].len() / w[1].len();
                assert_eq!(w[0].len() % w[1].len(), 0);
                let mut e = 0;
                let mut m = index;
                while m > 1 {
                    assert_eq!(m % p, 0, "[F_i : F_{{i+1}}] must be a p-power");
                    m /= p;
                    e += 1;
                }
                e
            })
            .collect();
        (chain, exponents)
    }

    /// Full Jennings data with the formula cross-checks.
    pub fn jennings_report(&self) -> JenningsReport {
        let filtration = self.radical_filtration();
        let (chain, exponents) = self.dimension_subgroups(&filtration);
        let p = self.group.prime();
        let m_direct = filtration.nilpotency_index;
        let weighted: u64 = exponents
            .iter()
            .enumerate()
            .map(|(i, &e)| (i as u64 + 1) * e as u64)
            .sum();
        let m_formula = (1 + (p - 1) * weighted) as usize;
        let sum_e: u32 = exponents.iter().sum();
        let e1 = exponents.first().copied().unwrap_or(0);
        let dim_j_mod_j2 = filtration.power(1).dim() - filtration.power(2).dim();
        let checks = vec![
            ("m_formula_equals_m_direct".to_string(), m_formula == m_direct),
            (
                "order_is_p_to_sum_of_exponents".to_string(),
                self.group.order() as u64 == p.pow(sum_e),
            ),
            (
                "e1_is_min_generators".to_string(),
                e1 == min_generators(&self.group),
            ),
            ("e1_is_dim_j_mod_j2".to_string(), e1 as usize == dim_j_mod_j2),
        ];
        JenningsReport {
            group: self.group.name().to_string(),
            prime: p,
            dimension_subgroups: chain,
            exponents,
            m_direct,
            m_formula,
            radical_dims: filtration.dims(),
            checks,
        }
    }

    // A handful of seeded random associativity checks on full vectors; the
    // Cayley table is already validated, this guards the bilinear extension.
    fn spot_check_associativity(&self) {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6a656e6e);
        let p = self.field.p();
        for _ in 0..5 {
            let rand_vec = |rng: &mut ChaCha8Rng| -> Vec<u64> {
                (0..self.dim()).map(|_| rng.gen_range(0..p)).collect()
            };
            let (x, y, z) = (rand_vec(&mut rng), rand_vec(&mut rng), rand_vec(&mut rng));
            let left = self.multiply(&self.multiply(&x, &y), &z);
            let right = self.multiply(&x, &self.multiply(&y, &z));
            assert_eq!(left, right, "algebra multiplication must be associative");
        }
    }
}

/// The chain kG = J^0 ⊇ J^1 ⊇ ... ⊇ J^m = 0.
#[derive(Debug, Clone)]
pub struct RadicalFiltration {
    powers: Vec<Subspace>,
    pub nilpotency_index: usize,
}

impl RadicalFiltration {
    /// J^i, clamped at the zero subspace for i ≥ m.
    pub fn power(&self, i: usize) -> &Subspace {
        let i = i.min(self.powers.len() - 1);
        &self.powers[i]
    }

    pub fn powers(&self) -> &[Subspace] {
        &self.powers
    }

    pub fn dims(&self) -> Vec<usize> {
        self.powers.iter().map(Subspace::dim).collect()
    }
}

/// Jennings data for one group algebra, with all formula checks evaluated.
#[derive(Debug, Clone, Serialize)]
pub struct JenningsReport {
    pub group: String,
    pub prime: u64,
    /// F_1 ⊇ F_2 ⊇ ... ⊇ {1}, as sorted element-index sets.
    pub dimension_subgroups: Vec<Vec<usize>>,
    pub exponents: Vec<u32>,
    pub m_direct: usize,
    pub m_formula: usize,
    pub radical_dims: Vec<usize>,
    pub checks: Vec<(String, bool)>,
}

impl JenningsReport {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{group_zoo, zoo_group};

    fn algebra(name: &str) -> Arc<GroupAlgebra> {
        GroupAlgebra::for_group(zoo_group(name).unwrap())
    }

    #[test]
    fn characteristic_mismatch_is_rejected() {
        let g = zoo_group("C2").unwrap();
        let f3 = FieldPrime::new(3).unwrap();
        assert!(matches!(
            GroupAlgebra::new(g, f3),
            Err(AlgebraError::CharacteristicMismatch { .. })
        ));
    }

    #[test]
    fn augmentation_ideal_dims() {
        assert_eq!(algebra("C2").augmentation_ideal().dim(), 1);
        assert_eq!(algebra("C3").augmentation_ideal().dim(), 2);
        assert_eq!(algebra("C2xC2").augmentation_ideal().dim(), 3);
    }

    #[test]
    fn augmentation_ideal_of_c2_is_norm_line() {
        let a = algebra("C2");
        let j = a.augmentation_ideal();
        // g - 1 = g + 1 over F_2: the norm element.
        assert!(j.contains(&[1, 1]));
        assert_eq!(j.dim(), 1);
    }

    #[test]
    fn radical_filtration_c2_c3() {
        assert_eq!(algebra("C2").radical_filtration().dims(), vec![2, 1, 0]);
        assert_eq!(algebra("C2").radical_filtration().nilpotency_index, 2);
        assert_eq!(algebra("C3").radical_filtration().dims(), vec![3, 2, 1, 0]);
        assert_eq!(algebra("C3").radical_filtration().nilpotency_index, 3);
    }

    #[test]
    fn radical_filtration_q8() {
        let f = algebra("Q8").radical_filtration();
        assert_eq!(f.nilpotency_index, 5);
        assert_eq!(f.power(2).dim(), 5);
        assert_eq!(f.dims(), vec![8, 7, 5, 3, 1, 0]);
    }

    #[test]
    fn norm_element_examples() {
        let a = algebra("C4");
        assert_eq!(a.norm_element(), vec![1, 1, 1, 1]);
        // norm * norm = |G| * norm = 0 in char p.
        let nu = a.norm_element();
        assert_eq!(a.multiply(&nu, &nu), a.zero());
        let c2 = algebra("C2");
        assert_eq!(c2.norm_element(), vec![1, 1]);
    }

    #[test]
    fn norm_spans_invariants_of_regular() {
        // norm * (g - 1) = 0 and g * norm = norm for every g.
        for name in ["C4", "Q8", "C3xC3"] {
            let a = algebra(name);
            let nu = a.norm_element();
            for g in a.group().elements() {
                assert_eq!(a.multiply(&a.basis_element(g), &nu), nu);
            }
        }
    }

    #[test]
    fn dimension_subgroups_examples() {
        let c2 = algebra("C2");
        let (chain, e) = c2.dimension_subgroups(&c2.radical_filtration());
        assert_eq!(chain, vec![vec![0, 1], vec![0]]);
        assert_eq!(e, vec![1]);

        let v4 = algebra("C2xC2");
        let (chain, e) = v4.dimension_subgroups(&v4.radical_filtration());
        assert_eq!(chain.len(), 2);
        assert_eq!(chain[0].len(), 4);
        assert_eq!(e, vec![2]);

        let c4 = algebra("C4");
        let (chain, e) = c4.dimension_subgroups(&c4.radical_filtration());
        assert_eq!(chain, vec![vec![0, 1, 2, 3], vec![0, 2], vec![0]]);
        assert_eq!(e, vec![1, 1]);
    }

    #[test]
    fn dimension_subgroups_c9_has_gap() {
        // F_2 = F_3 = <g^3>, so e = (1, 0, 1).
        let c9 = algebra("C9");
        let (chain, e) = c9.dimension_subgroups(&c9.radical_filtration());
        assert_eq!(e, vec![1, 0, 1]);
        assert_eq!(chain[1], chain[2]);
        assert_eq!(chain[1], vec![0, 3, 6]);
    }

    #[test]
    fn jennings_reports_for_paper_cases() {
        let r = algebra("C3").jennings_report();
        assert_eq!(r.exponents, vec![1]);
        assert_eq!(r.m_formula, 3);
        assert_eq!(r.m_direct, 3);

        let r = algebra("C2xC2").jennings_report();
        assert_eq!(r.exponents, vec![2]);
        assert_eq!(r.m_formula, 3);
        assert_eq!(r.m_direct, 3);

        let r = algebra("C4").jennings_report();
        assert_eq!(r.exponents, vec![1, 1]);
        assert_eq!(r.m_formula, 4);
        assert_eq!(r.m_direct, 4);

        let r = algebra("Q8").jennings_report();
        assert_eq!(r.exponents, vec![2, 1]);
        assert_eq!(r.m_formula, 5);
    }

    #[test]
    fn jennings_checks_pass_for_whole_zoo() {
        for g in group_zoo() {
            let report = GroupAlgebra::for_group(g).jennings_report();
            assert!(
                report.all_checks_pass(),
                "Jennings checks failed for {}: {:?}",
                report.group,
                report.checks
            );
        }
    }

    #[test]
    fn radical_powers_multiply_into_higher_powers() {
        for name in ["C4", "C2xC2", "Q8", "C9"] {
            let a = algebra(name);
            let f = a.radical_filtration();
            let m = f.nilpotency_index;
            for i in 0..=m {
                for j in 0..=m {
                    let prod = a.subspace_product(f.power(i), f.power(j));
                    assert!(
                        prod.is_subspace_of(f.power((i + j).min(m))),
                        "J^{} * J^{} not inside J^{} for {}",
                        i,
                        j,
                        i + j,
                        name
                    );
                }
            }
        }
    }
}
