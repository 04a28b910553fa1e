//! Monomial ideals kept in minimal, canonically sorted form, plus the
//! irreducible (pure-power) ideals that Alexander duality produces.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, vector_string, Monomial};

/// A monomial ideal given by its minimal generators.
///
/// The zero ideal has no generators. The unit ideal has the single generator `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimal generating set of the ideal generated by `gens`.
    pub fn minimize<I: IntoIterator<Item = Monomial>>(n: usize, gens: I) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyAmbient);
        }
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = all.iter().find(|g| g.n() != n) {
            return Err(Error::DimensionMismatch {
                left: n,
                right: bad.n(),
            });
        }
        all.sort();
        all.dedup();
        // Sorted by degree, so any divisor of a candidate was seen before it.
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        for g in all {
            if !kept.iter().any(|k| k.divides_unchecked(&g)) {
                kept.push(g);
            }
        }
        Ok(Self { n, gens: kept })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::minimize(n, [])
    }

    pub fn unit(n: usize) -> Result<Self> {
        Self::minimize(n, [Monomial::unit(n)?])
    }

    /// `(x_1, ..., x_n)`.
    pub fn maximal(n: usize) -> Result<Self> {
        let vars = (1..=n)
            .map(|i| Monomial::variable(i, n))
            .collect::<Result<Vec<_>>>()?;
        Self::minimize(n, vars)
    }

    /// `(x_1^{a_1}, ..., x_n^{a_n})` over the positive entries of `a`.
    pub fn pure_powers(a: &[u32]) -> Result<Self> {
        Ok(IrreducibleComponent::new(a.to_vec())?.to_ideal())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: n,
            });
        }
        Ok(())
    }

    fn require_proper(&self) -> Result<()> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        Ok(())
    }

    pub fn contains_monomial(&self, u: &Monomial) -> Result<bool> {
        self.check_dim(u.n())?;
        Ok(self.contains_unchecked(u))
    }

    pub(crate) fn contains_unchecked(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(u))
    }

    /// `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Self) -> Result<bool> {
        self.check_dim(other.n)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    /// Intersection via pairwise lcms of generators, then minimization.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_dim(other.n)?;
        let lcms = self
            .gens
            .iter()
            .flat_map(|u| other.gens.iter().map(move |v| u.lcm_unchecked(v)));
        Self::minimize(self.n, lcms)
    }

    /// `I_{>=t}`: generated by the monomials of `I` of degree at least `t`.
    pub fn truncate(&self, t: u64) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        // Distinct degree-t monomials never divide each other, and a minimal
        // generator of degree >= t has no other divisor in the ideal, so the
        // union is already minimal.
        let mut out = BTreeSet::new();
        for g in &self.gens {
            let deg = g.degree();
            if deg >= t {
                out.insert(g.clone());
                continue;
            }
            let missing = u32::try_from(t - deg).map_err(|_| Error::Overflow)?;
            for w in monomials_of_degree(self.n, missing) {
                out.insert(g.mul(&w)?);
            }
        }
        Ok(Self {
            n: self.n,
            gens: out.into_iter().collect(),
        })
    }

    /// `deg(I)`: the largest degree of a minimal generator.
    pub fn max_degree(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(self.gens.iter().map(Monomial::degree).max().unwrap_or(0))
    }

    /// `m(I)`: the largest `m(u)` over minimal generators.
    pub fn max_index(&self) -> Result<usize> {
        self.require_proper()?;
        self.gens
            .iter()
            .map(Monomial::max_index)
            .try_fold(0, |acc, m| Ok(acc.max(m?)))
    }

    /// Alexander dual with respect to `c`: the intersection of `m^{c∖b}`
    /// over the minimal generators `x^b`.
    pub fn alexander_dual(&self, c: &[u32]) -> Result<Self> {
        let components = self.alexander_dual_components(c)?;
        intersect_components(self.n, &components)
    }

    /// The irreducible ideals `m^{c∖b}`, one per minimal generator, in generator order.
    pub fn alexander_dual_components(&self, c: &[u32]) -> Result<Vec<IrreducibleComponent>> {
        self.require_proper()?;
        self.check_dim(c.len())?;
        let target = Monomial::new(c.to_vec())?;
        self.gens
            .iter()
            .map(|b| {
                if !b.divides_unchecked(&target) {
                    return Err(Error::NotDividing {
                        generator: b.to_string(),
                        vector: vector_string(c),
                    });
                }
                IrreducibleComponent::new(vector_complement(c, b.exponents())?)
            })
            .collect()
    }

    /// Keeps only the variables `x_1..x_r`. Fails if a generator uses a dropped variable.
    pub fn restrict(&self, r: usize) -> Option<Self> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.truncate_ambient(r))
            .collect::<Option<Vec<_>>>()?;
        Self::minimize(r, gens).ok()
    }

    /// Pads the ambient ring with `n - self.n()` unused variables.
    pub fn extend_ambient(&self, n: usize) -> Self {
        let n = n.max(self.n);
        Self {
            n,
            gens: self.gens.iter().map(|g| g.extend_ambient(n)).collect(),
        }
    }
}

/// Membership test that answers by hash lookup for monomials no larger in
/// degree than the smallest generator, where divisibility means equality.
pub(crate) struct MembershipIndex<'a> {
    ideal: &'a MonomialIdeal,
    gens: HashSet<&'a Monomial>,
    min_degree: u64,
}

impl<'a> MembershipIndex<'a> {
    pub(crate) fn new(ideal: &'a MonomialIdeal) -> Self {
        Self {
            ideal,
            gens: ideal.gens.iter().collect(),
            min_degree: ideal.gens.iter().map(Monomial::degree).min().unwrap_or(0),
        }
    }

    pub(crate) fn contains(&self, u: &Monomial) -> bool {
        if u.degree() <= self.min_degree {
            self.gens.contains(u)
        } else {
            self.ideal.contains_unchecked(u)
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(", "))
    }
}

/// `c∖d`: coordinate `c_i + 1 - d_i` where `d_i >= 1`, else 0. Requires `d <= c`.
pub fn vector_complement(c: &[u32], d: &[u32]) -> Result<Vec<u32>> {
    if c.len() != d.len() {
        return Err(Error::DimensionMismatch {
            left: c.len(),
            right: d.len(),
        });
    }
    c.iter()
        .zip(d)
        .enumerate()
        .map(|(k, (&ci, &di))| {
            if di > ci {
                Err(Error::ComplementUndefined {
                    index: k + 1,
                    c: ci,
                    d: di,
                })
            } else if di == 0 {
                Ok(0)
            } else {
                Ok(ci - di + 1)
            }
        })
        .collect()
}

/// An irreducible monomial ideal `m^v = <x_i^{v_i} | v_i >= 1>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    exponents: Vec<u32>,
}

impl IrreducibleComponent {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::EmptyAmbient);
        }
        if exponents.iter().all(|&e| e == 0) {
            return Err(Error::ZeroVector);
        }
        Ok(Self { exponents })
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Variables whose pure powers generate the component; also its radical.
    pub fn support(&self) -> BTreeSet<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, _)| k + 1)
            .collect()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.n();
        let gens = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| Monomial::pure_power(k + 1, e, n).expect("index in range"));
        MonomialIdeal::minimize(n, gens).expect("dimensions agree")
    }

    /// Membership: some `x_i^{v_i}` divides `u`.
    pub fn contains_monomial(&self, u: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(u.exponents())
            .any(|(&v, &e)| v > 0 && e >= v)
    }
}

/// Rendered in variable order, e.g. `(x1^2, x2^2, x3)`.
impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let parts: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| {
                Monomial::pure_power(k + 1, e, n)
                    .expect("index in range")
                    .to_string()
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `m^v` from a degree vector with at least one positive entry.
pub fn irreducible_from_vector(v: &[u32]) -> Result<IrreducibleComponent> {
    IrreducibleComponent::new(v.to_vec())
}

/// Intersection of a nonempty list of components.
pub fn intersect_components(
    n: usize,
    components: &[IrreducibleComponent],
) -> Result<MonomialIdeal> {
    let mut iter = components.iter();
    let Some(first) = iter.next() else {
        return MonomialIdeal::unit(n);
    };
    iter.try_fold(first.to_ideal(), |acc, q| acc.intersect(&q.to_ideal()))
}

/// Drops duplicate components and every component containing the
/// intersection of the remaining ones. The overall intersection is unchanged.
pub fn irredundant_filter(components: &[IrreducibleComponent]) -> Vec<IrreducibleComponent> {
    let mut kept: Vec<IrreducibleComponent> = Vec::new();
    for q in components {
        if !kept.contains(q) {
            kept.push(q.clone());
        }
    }
    'restart: loop {
        if kept.len() < 2 {
            break;
        }
        for k in 0..kept.len() {
            let others: Vec<IrreducibleComponent> = kept
                .iter()
                .enumerate()
                .filter(|(l, _)| *l != k)
                .map(|(_, q)| q.clone())
                .collect();
            let rest = match intersect_components(kept[k].n(), &others) {
                Ok(rest) => rest,
                Err(_) => continue,
            };
            if rest
                .generators()
                .iter()
                .all(|g| kept[k].contains_monomial(g))
            {
                kept.remove(k);
                continue 'restart;
            }
        }
        break;
    }
    kept
}

/// Radicals of the irredundant components, deduplicated, in component order.
pub fn associated_primes(components: &[IrreducibleComponent]) -> Vec<BTreeSet<usize>> {
    let mut primes: Vec<BTreeSet<usize>> = Vec::new();
    for q in irredundant_filter(components) {
        let p = q.support();
        if !primes.contains(&p) {
            primes.push(p);
        }
    }
    primes
}

/// Whether the associated primes form a chain under inclusion.
pub fn is_totally_ordered_ass(components: &[IrreducibleComponent]) -> bool {
    let mut primes = associated_primes(components);
    primes.sort_by_key(BTreeSet::len);
    primes.windows(2).all(|w| w[0].is_subset(&w[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::monomials_up_to_degree;
    use proptest::prelude::*;

    fn m(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec()).unwrap()
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimize(n, gens.iter().map(|g| m(g))).unwrap()
    }

    fn comp(v: &[u32]) -> IrreducibleComponent {
        IrreducibleComponent::new(v.to_vec()).unwrap()
    }

    fn example_dual() -> MonomialIdeal {
        ideal(
            4,
            &[
                &[3, 0, 0, 0],
                &[0, 3, 0, 0],
                &[1, 0, 2, 0],
                &[0, 1, 2, 0],
                &[2, 0, 0, 1],
                &[0, 2, 0, 1],
                &[1, 0, 1, 1],
                &[0, 1, 1, 1],
            ],
        )
    }

    fn remark_ideal() -> MonomialIdeal {
        ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[1, 0, 1], &[0, 1, 1]])
    }

    /// Membership in an intersection decided one monomial at a time.
    fn brute_intersection(i: &MonomialIdeal, j: &MonomialIdeal, bound: u32) -> Vec<Monomial> {
        monomials_up_to_degree(i.n(), bound)
            .into_iter()
            .filter(|u| i.contains_unchecked(u) && j.contains_unchecked(u))
            .collect()
    }

    #[test]
    fn minimize_examples() {
        assert_eq!(ideal(2, &[&[1, 0], &[1, 1]]), ideal(2, &[&[1, 0]]));
        let i = ideal(2, &[&[2, 0], &[0, 2], &[1, 2], &[2, 1]]);
        assert_eq!(i.generators(), &[m(&[2, 0]), m(&[0, 2])]);
        assert!(MonomialIdeal::minimize(2, []).unwrap().is_zero());
        let u = ideal(2, &[&[0, 0], &[1, 1]]);
        assert!(u.is_unit());
    }

    #[test]
    fn minimize_pairwise_lcms_of_example_components() {
        let q1 = comp(&[1, 1, 0, 0]).to_ideal();
        let q2 = comp(&[2, 2, 1, 0]).to_ideal();
        let q3 = comp(&[3, 3, 2, 1]).to_ideal();
        let q12 = q1.intersect(&q2).unwrap();
        let lcms: Vec<Monomial> = q12
            .generators()
            .iter()
            .flat_map(|u| q3.generators().iter().map(move |v| u.lcm(v).unwrap()))
            .collect();
        assert_eq!(MonomialIdeal::minimize(4, lcms).unwrap(), example_dual());
    }

    #[test]
    fn contains_examples() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 1]]);
        assert!(!i.contains_monomial(&m(&[1, 1, 0])).unwrap());
        assert!(i.contains_monomial(&m(&[1, 1, 1])).unwrap());
        for g in i.generators() {
            assert!(i.contains_monomial(g).unwrap());
        }
    }

    #[test]
    fn intersect_examples() {
        let a = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 1]]);
        let ab = a.intersect(&b).unwrap();
        assert_eq!(ab, remark_ideal());
        let brute = brute_intersection(&a, &b, 3);
        let from_ab: Vec<Monomial> = monomials_up_to_degree(3, 3)
            .into_iter()
            .filter(|u| ab.contains_unchecked(u))
            .collect();
        assert_eq!(brute, from_ab);
        assert_eq!(a.intersect(&a).unwrap(), a);

        let q1 = comp(&[1, 1, 0, 0]).to_ideal();
        let q2 = comp(&[2, 2, 1, 0]).to_ideal();
        let q3 = comp(&[3, 3, 2, 1]).to_ideal();
        let all = q1.intersect(&q2).unwrap().intersect(&q3).unwrap();
        assert_eq!(all, example_dual());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(
            vector_complement(&[3, 3, 2, 1], &[3, 3, 0, 0]).unwrap(),
            vec![1, 1, 0, 0]
        );
        assert_eq!(
            vector_complement(&[3, 3, 2, 1], &[1, 1, 1, 1]).unwrap(),
            vec![3, 3, 2, 1]
        );
        assert_eq!(
            vector_complement(&[4, 0, 2], &[4, 0, 2]).unwrap(),
            vec![1, 0, 1]
        );
        assert_eq!(
            vector_complement(&[1, 1], &[2, 0]),
            Err(Error::ComplementUndefined {
                index: 1,
                c: 1,
                d: 2
            })
        );
    }

    #[test]
    fn irreducible_examples() {
        assert_eq!(
            irreducible_from_vector(&[2, 2, 1, 0]).unwrap().to_ideal(),
            ideal(4, &[&[2, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 1, 0]])
        );
        assert_eq!(
            irreducible_from_vector(&[1, 1, 0, 0]).unwrap().to_ideal(),
            ideal(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]])
        );
        assert_eq!(
            irreducible_from_vector(&[0, 0, 0, 1]).unwrap().to_ideal(),
            ideal(4, &[&[0, 0, 0, 1]])
        );
        assert_eq!(irreducible_from_vector(&[0, 0]), Err(Error::ZeroVector));
    }

    #[test]
    fn alexander_dual_examples() {
        let inclusion = ideal(4, &[&[3, 3, 0, 0], &[2, 2, 2, 0], &[1, 1, 1, 1]]);
        let c = [3, 3, 2, 1];
        let dual = inclusion.alexander_dual(&c).unwrap();
        assert_eq!(dual, example_dual());
        assert_eq!(dual.alexander_dual(&c).unwrap(), inclusion);

        let principal = ideal(3, &[&[2, 0, 5]]);
        assert_eq!(
            principal.alexander_dual(&[2, 0, 5]).unwrap(),
            ideal(3, &[&[1, 0, 0], &[0, 0, 1]])
        );

        let err = inclusion.alexander_dual(&[2, 3, 2, 1]).unwrap_err();
        assert_eq!(
            err,
            Error::NotDividing {
                generator: "x1^3*x2^3".into(),
                vector: "[2,3,2,1]".into()
            }
        );
        assert_eq!(
            MonomialIdeal::zero(2).unwrap().alexander_dual(&[1, 1]),
            Err(Error::ZeroIdeal)
        );
    }

    #[test]
    fn truncate_examples() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 1]]);
        assert_eq!(
            i.truncate(2).unwrap(),
            ideal(
                3,
                &[&[2, 0, 0], &[0, 2, 0], &[1, 0, 1], &[0, 1, 1], &[0, 0, 2]]
            )
        );
        let t3 = i.truncate(3).unwrap();
        assert_eq!(t3.generators().len(), 10);
        let expected = ideal(
            3,
            &[
                &[3, 0, 0],
                &[2, 1, 0],
                &[2, 0, 1],
                &[1, 2, 0],
                &[0, 3, 0],
                &[0, 2, 1],
                &[1, 1, 1],
                &[1, 0, 2],
                &[0, 1, 2],
                &[0, 0, 3],
            ],
        );
        assert_eq!(t3, expected);
        assert_eq!(i.truncate(0).unwrap(), i);
        assert_eq!(i.truncate(1).unwrap(), i);
        assert_eq!(
            MonomialIdeal::zero(3).unwrap().truncate(2),
            Err(Error::ZeroIdeal)
        );
    }

    #[test]
    fn deg_and_max_index() {
        assert_eq!(example_dual().max_degree().unwrap(), 3);
        assert_eq!(MonomialIdeal::maximal(5).unwrap().max_degree().unwrap(), 1);
        assert_eq!(remark_ideal().max_degree().unwrap(), 2);
        assert_eq!(remark_ideal().max_index().unwrap(), 3);
        assert_eq!(example_dual().max_index().unwrap(), 4);
        assert_eq!(ideal(3, &[&[5, 0, 0]]).max_index().unwrap(), 1);
        assert_eq!(
            MonomialIdeal::zero(2).unwrap().max_degree(),
            Err(Error::ZeroIdeal)
        );
        assert_eq!(
            MonomialIdeal::unit(2).unwrap().max_index(),
            Err(Error::UnitIdeal)
        );
    }

    #[test]
    fn associated_primes_examples() {
        let comps = vec![
            comp(&[1, 1, 0, 0]),
            comp(&[2, 2, 1, 0]),
            comp(&[3, 3, 2, 1]),
        ];
        assert_eq!(irredundant_filter(&comps), comps);
        assert_eq!(
            associated_primes(&comps),
            vec![
                BTreeSet::from([1, 2]),
                BTreeSet::from([1, 2, 3]),
                BTreeSet::from([1, 2, 3, 4])
            ]
        );
        assert!(is_totally_ordered_ass(&comps));

        assert_eq!(
            associated_primes(&[comp(&[0, 3, 1])]),
            vec![BTreeSet::from([2, 3])]
        );

        // same support, one contains the other
        let nested = vec![comp(&[1, 1]), comp(&[2, 1])];
        assert_eq!(irredundant_filter(&nested), vec![comp(&[2, 1])]);
        assert_eq!(associated_primes(&nested), vec![BTreeSet::from([1, 2])]);
    }

    #[test]
    fn irredundant_filter_examples() {
        assert_eq!(
            irredundant_filter(&[comp(&[1]), comp(&[2])]),
            vec![comp(&[2])]
        );
        assert_eq!(
            irredundant_filter(&[comp(&[1, 1]), comp(&[1, 1])]),
            vec![comp(&[1, 1])]
        );
        // incomparable: both needed
        let both = vec![comp(&[2, 1]), comp(&[1, 2])];
        assert_eq!(irredundant_filter(&both), both);
    }

    #[test]
    fn totally_ordered_examples() {
        assert!(!is_totally_ordered_ass(&[comp(&[1, 0]), comp(&[0, 1])]));
        assert!(is_totally_ordered_ass(&[comp(&[0, 1])]));
    }

    fn small_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
        proptest::collection::vec(proptest::collection::vec(0u32..3, n), 1..5).prop_map(
            move |gens| {
                MonomialIdeal::minimize(n, gens.into_iter().map(|g| Monomial::new(g).unwrap()))
                    .unwrap()
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn intersection_membership((i, j) in (small_ideal(3), small_ideal(3))) {
            let ij = i.intersect(&j).unwrap();
            for u in monomials_up_to_degree(3, 6) {
                prop_assert_eq!(
                    ij.contains_monomial(&u).unwrap(),
                    i.contains_monomial(&u).unwrap() && j.contains_monomial(&u).unwrap()
                );
            }
        }

        #[test]
        fn truncation_membership(i in small_ideal(3), t in 0u64..5) {
            let it = i.truncate(t).unwrap();
            for u in monomials_up_to_degree(3, t as u32 + 3) {
                prop_assert_eq!(
                    it.contains_monomial(&u).unwrap(),
                    i.contains_monomial(&u).unwrap() && u.degree() >= t
                );
            }
        }

        #[test]
        fn minimal_generators_are_antichain(i in small_ideal(4)) {
            let g = i.generators();
            for (a, u) in g.iter().enumerate() {
                for (b, v) in g.iter().enumerate() {
                    if a != b {
                        prop_assert!(!u.divides(v).unwrap());
                    }
                }
            }
            prop_assert!(g.windows(2).all(|w| w[0] < w[1]));
        }

        #[test]
        fn duality_is_an_involution(i in small_ideal(3)) {
            prop_assume!(!i.is_unit());
            let c: Vec<u32> = (1..=3)
                .map(|k| i.generators().iter().map(|g| g.exponent(k)).max().unwrap())
                .collect();
            let dual = i.alexander_dual(&c).unwrap();
            prop_assert_eq!(dual.alexander_dual(&c).unwrap(), i);
        }
    }
}
