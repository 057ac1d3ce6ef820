//! Finite p-groups as validated Cayley tables.
//!
//! Groups are tiny (order <= 16 in practice), so every invariant is checked
//! eagerly at construction: identity row/column, Latin-square property,
//! associativity over all triples, inverses, prime-power order, and that the
//! distinguished generators really generate.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("Cayley table validation failed: {0}")]
    InvalidTable(String),
}

/// Specification of one of the supported group families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// Cyclic group of prime-power order.
    Cyclic(u64),
    ElementaryAbelian { prime: u64, rank: u32 },
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    Dihedral8,
    Quaternion8,
}

/// A finite p-group given by a full Cayley table. Index 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Group {
    name: String,
    order: usize,
    prime: u64,
    exponent: u32,
    /// Row-major `order x order` table of element indices.
    table: Vec<usize>,
    inverse: Vec<usize>,
    generators: Vec<usize>,
}

impl Group {
    #[inline]
    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// e with |G| = p^e.
    #[inline]
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// Closure of a seed set under multiplication; sorted element indices.
    pub fn closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.order];
        in_set[0] = true;
        let mut stack: Vec<usize> = vec![0];
        for &s in seed {
            if !in_set[s] {
                in_set[s] = true;
                stack.push(s);
            }
        }
        // Products with generators on either side until stable.
        let gens: Vec<usize> = seed.to_vec();
        while let Some(x) = stack.pop() {
            for &g in &gens {
                for y in [self.mul(x, g), self.mul(g, x)] {
                    if !in_set[y] {
                        in_set[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        (0..self.order).filter(|&i| in_set[i]).collect()
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        let in_set = {
            let mut s = vec![false; self.order];
            for &e in elems {
                s[e] = true;
            }
            s
        };
        in_set[0]
            && elems
                .iter()
                .all(|&a| in_set[self.inv(a)] && elems.iter().all(|&b| in_set[self.mul(a, b)]))
    }

    pub fn is_normal(&self, elems: &[usize]) -> bool {
        let in_set = {
            let mut s = vec![false; self.order];
            for &e in elems {
                s[e] = true;
            }
            s
        };
        self.is_subgroup(elems)
            && elems
                .iter()
                .all(|&x| (0..self.order).all(|g| in_set[self.conjugate(g, x)]))
    }

    fn validate(&self) -> Result<(), GroupError> {
        let n = self.order;
        if n == 0 || self.table.len() != n * n {
            return Err(GroupError::InvalidTable("table size".into()));
        }
        // p^e = n.
        let mut m = n as u64;
        let mut e = 0u32;
        while m > 1 {
            if m % self.prime != 0 {
                return Err(GroupError::InvalidTable(format!(
                    "order {} is not a power of {}",
                    n, self.prime
                )));
            }
            m /= self.prime;
            e += 1;
        }
        if e != self.exponent {
            return Err(GroupError::InvalidTable("stored exponent wrong".into()));
        }
        // Identity row and column.
        for i in 0..n {
            if self.mul(0, i) != i || self.mul(i, 0) != i {
                return Err(GroupError::InvalidTable("index 0 is not the identity".into()));
            }
        }
        // Latin square.
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                let r = self.mul(i, j);
                let c = self.mul(j, i);
                if r >= n || c >= n || seen_row[r] || seen_col[c] {
                    return Err(GroupError::InvalidTable(format!(
                        "row/column {} is not a permutation",
                        i
                    )));
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }
        // Associativity, all triples.
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::InvalidTable(format!(
                            "associativity fails at ({}, {}, {})",
                            a, b, c
                        )));
                    }
                }
            }
        }
        // Inverses.
        for a in 0..n {
            let ia = self.inverse[a];
            if ia >= n || self.mul(a, ia) != 0 || self.mul(ia, a) != 0 {
                return Err(GroupError::InvalidTable(format!("element {} has no inverse", a)));
            }
        }
        // Generators generate.
        if self.closure(&self.generators).len() != n {
            return Err(GroupError::InvalidTable("generators do not generate".into()));
        }
        Ok(())
    }
}

fn factor_prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut m = n;
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            return if m == 1 { Some((p, e)) } else { None };
        }
        p += 1;
    }
    Some((n, 1))
}

fn finish(
    name: String,
    order: usize,
    prime: u64,
    exponent: u32,
    table: Vec<usize>,
    generators: Vec<usize>,
) -> Result<Group, GroupError> {
    let mut inverse = vec![usize::MAX; order];
    for a in 0..order {
        for b in 0..order {
            if table[a * order + b] == 0 {
                inverse[a] = b;
            }
        }
    }
    let g = Group { name, order, prime, exponent, table, inverse, generators };
    g.validate()?;
    Ok(g)
}

/// Build a validated group from a spec. Construction is deterministic:
/// identical specs produce bit-identical tables.
///
/// Element orderings: cyclic groups list powers of the generator; direct
/// products list lexicographic pairs (left index major); D8 lists r^i s^j
/// ordered by (i, j); Q8 lists 1, -1, i, -i, j, -j, k, -k.
pub fn build_group(spec: &GroupSpec) -> Result<Group, GroupError> {
    match spec {
        GroupSpec::Cyclic(n) => {
            let (p, e) = factor_prime_power(*n).ok_or_else(|| {
                GroupError::InvalidSpec(format!("cyclic order {} is not a prime power", n))
            })?;
            let n = *n as usize;
            let mut table = vec![0usize; n * n];
            for a in 0..n {
                for b in 0..n {
                    table[a * n + b] = (a + b) % n;
                }
            }
            let gens = if n == 1 { vec![] } else { vec![1] };
            finish(format!("C{}", n), n, p, e, table, gens)
        }
        GroupSpec::ElementaryAbelian { prime, rank } => {
            if *rank == 0 {
                return Err(GroupError::InvalidSpec("elementary abelian rank 0".into()));
            }
            if factor_prime_power(*prime) != Some((*prime, 1)) {
                return Err(GroupError::InvalidSpec(format!("{} is not prime", prime)));
            }
            let mut spec = GroupSpec::Cyclic(*prime);
            for _ in 1..*rank {
                spec = GroupSpec::DirectProduct(
                    Box::new(spec),
                    Box::new(GroupSpec::Cyclic(*prime)),
                );
            }
            build_group(&spec)
        }
        GroupSpec::DirectProduct(a, b) => {
            let ga = build_group(a)?;
            let gb = build_group(b)?;
            if ga.prime != gb.prime {
                return Err(GroupError::InvalidSpec(format!(
                    "direct product of a {}-group and a {}-group",
                    ga.prime, gb.prime
                )));
            }
            let (na, nb) = (ga.order, gb.order);
            let n = na * nb;
            let idx = |x: usize, y: usize| x * nb + y;
            let mut table = vec![0usize; n * n];
            for x1 in 0..na {
                for y1 in 0..nb {
                    for x2 in 0..na {
                        for y2 in 0..nb {
                            table[idx(x1, y1) * n + idx(x2, y2)] =
                                idx(ga.mul(x1, x2), gb.mul(y1, y2));
                        }
                    }
                }
            }
            let mut gens: Vec<usize> = ga.generators.iter().map(|&g| idx(g, 0)).collect();
            gens.extend(gb.generators.iter().map(|&g| idx(0, g)));
            finish(
                format!("{}x{}", ga.name, gb.name),
                n,
                ga.prime,
                ga.exponent + gb.exponent,
                table,
                gens,
            )
        }
        GroupSpec::Dihedral8 => {
            // r^i s^j, index 2i + j; r^4 = s^2 = 1, s r = r^{-1} s.
            let idx = |i: usize, j: usize| 2 * i + j;
            let mut table = vec![0usize; 64];
            for i1 in 0..4 {
                for j1 in 0..2 {
                    for i2 in 0..4 {
                        for j2 in 0..2 {
                            let i = if j1 == 0 { (i1 + i2) % 4 } else { (i1 + 4 - i2) % 4 };
                            let j = (j1 + j2) % 2;
                            table[idx(i1, j1) * 8 + idx(i2, j2)] = idx(i, j);
                        }
                    }
                }
            }
            finish("D8".into(), 8, 2, 3, table, vec![idx(1, 0), idx(0, 1)])
        }
        GroupSpec::Quaternion8 => {
            // 1, -1, i, -i, j, -j, k, -k; axis in {1,i,j,k}, index 2*axis + sign.
            let idx = |axis: usize, neg: usize| 2 * axis + neg;
            // axis multiplication table: (result_axis, sign_flip)
            const AXIS: [[(usize, usize); 4]; 4] = [
                [(0, 0), (1, 0), (2, 0), (3, 0)],
                [(1, 0), (0, 1), (3, 0), (2, 1)],
                [(2, 0), (3, 1), (0, 1), (1, 0)],
                [(3, 0), (2, 0), (1, 1), (0, 1)],
            ];
            let mut table = vec![0usize; 64];
            for a1 in 0..4 {
                for n1 in 0..2 {
                    for a2 in 0..4 {
                        for n2 in 0..2 {
                            let (axis, flip) = AXIS[a1][a2];
                            let neg = (n1 + n2 + flip) % 2;
                            table[idx(a1, n1) * 8 + idx(a2, n2)] = idx(axis, neg);
                        }
                    }
                }
            }
            finish("Q8".into(), 8, 2, 3, table, vec![idx(1, 0), idx(2, 0)])
        }
    }
}

/// The stable zoo names, in canonical order.
pub const ZOO_NAMES: [&str; 12] = [
    "C2", "C3", "C4", "C5", "C8", "C9", "C2xC2", "C3xC3", "C2xC4", "C2xC2xC2", "D8", "Q8",
];

/// The fixed list of groups every verification quantifies over.
pub fn group_zoo() -> Vec<Group> {
    use GroupSpec::*;
    let specs = [
        Cyclic(2),
        Cyclic(3),
        Cyclic(4),
        Cyclic(5),
        Cyclic(8),
        Cyclic(9),
        ElementaryAbelian { prime: 2, rank: 2 },
        ElementaryAbelian { prime: 3, rank: 2 },
        DirectProduct(Box::new(Cyclic(2)), Box::new(Cyclic(4))),
        ElementaryAbelian { prime: 2, rank: 3 },
        Dihedral8,
        Quaternion8,
    ];
    specs
        .iter()
        .map(|s| build_group(s).expect("zoo specs are valid"))
        .collect()
}

/// Look up a zoo group by its stable name.
pub fn zoo_group(name: &str) -> Option<Group> {
    let pos = ZOO_NAMES.iter().position(|&n| n == name)?;
    Some(group_zoo().swap_remove(pos))
}

/// Minimal number of generators, as log_p of the index of the Frattini
/// subgroup Φ(G) = G^p [G,G], computed from the Cayley table.
pub fn min_generators(g: &Group) -> u32 {
    let n = g.order();
    let mut seed: Vec<usize> = Vec::new();
    for a in 0..n {
        // a^p
        let mut x = 0;
        for _ in 0..g.prime() {
            x = g.mul(x, a);
        }
        seed.push(x);
        // commutators [a, b]
        for b in 0..n {
            seed.push(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
        }
    }
    let frattini = g.closure(&seed);
    let index = (n / frattini.len()) as u64;
    let mut e = 0;
    let mut m = index;
    while m > 1 {
        assert_eq!(m % g.prime(), 0, "Frattini index must be a p-power");
        m /= g.prime();
        e += 1;
    }
    e
}
