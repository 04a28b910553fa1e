//! Exact multigraded Betti numbers and Castelnuovo–Mumford regularity.
//!
//! `β_{i,b}(I) = dim H̃_{i-1}(K^b(I))` where `K^b(I)` is the upper Koszul
//! simplicial complex `{τ ⊆ supp(b) squarefree : x^{b-τ} ∈ I}`. Nonzero
//! Betti numbers only occur at lcms of subsets of minimal generators, so the
//! lcm lattice is the search space. Everything is exact; no floating point.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::IncreasingHypergraph;
use crate::ideal::MonomialIdeal;
use crate::linalg::Field;
use crate::monomial::Monomial;
use crate::stability::{is_stable, q_bound, t_bound};

/// Largest generator count accepted by the lattice enumeration.
pub const MAX_GENERATORS: usize = 20;
/// Largest ground set accepted by the homology computation.
pub const MAX_GROUND_SET: usize = 20;

/// A simplicial complex on at most [`MAX_GROUND_SET`] vertices.
///
/// Faces are bitmasks over positions in `ground`. No faces at all is the
/// void complex; `{∅}` alone is the irrelevant complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: Vec<usize>,
    faces: BTreeSet<u32>,
}

impl SimplicialComplex {
    /// Downward closure of `facets`, given as subsets of `ground`.
    pub fn from_facets(ground: Vec<usize>, facets: &[Vec<usize>]) -> Result<Self> {
        if ground.len() > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge {
                size: ground.len(),
                limit: MAX_GROUND_SET,
            });
        }
        let mut faces = BTreeSet::new();
        for facet in facets {
            let mut mask = 0u32;
            for v in facet {
                let pos = ground
                    .iter()
                    .position(|g| g == v)
                    .ok_or(Error::VariableOutOfRange {
                        index: *v,
                        n: ground.len(),
                    })?;
                mask |= 1 << pos;
            }
            // all submasks
            let mut sub = mask;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        Ok(Self { ground, faces })
    }

    pub fn void(ground: Vec<usize>) -> Self {
        Self {
            ground,
            faces: BTreeSet::new(),
        }
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn ground(&self) -> &[usize] {
        &self.ground
    }

    /// Faces as sorted vertex lists, ordered by size then lexicographically.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .faces
            .iter()
            .map(|&mask| {
                (0..self.ground.len())
                    .filter(|k| mask & (1 << k) != 0)
                    .map(|k| self.ground[k])
                    .collect()
            })
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    pub fn is_downward_closed(&self) -> bool {
        self.faces.iter().all(|&f| {
            (0..32)
                .filter(|k| f & (1 << k) != 0)
                .all(|k| self.faces.contains(&(f & !(1 << k))))
        })
    }
}

/// Reduced homology dimensions; entry `k` is `dim H̃_{k-1}`, starting at degree −1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedHomology(pub Vec<u64>);

impl ReducedHomology {
    /// `dim H̃_dim`, for `dim >= -1`.
    pub fn dim(&self, dim: i64) -> u64 {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|k| self.0.get(k))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

/// Reduced homology of the augmented chain complex, empty face in degree −1.
pub fn reduced_homology_dims(complex: &SimplicialComplex, field: Field) -> ReducedHomology {
    if complex.is_void() {
        return ReducedHomology(Vec::new());
    }
    // faces grouped by cardinality; cardinality k lives in degree k - 1
    let max_size = complex
        .faces
        .iter()
        .map(|f| f.count_ones() as usize)
        .max()
        .unwrap_or(0);
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); max_size + 1];
    for &f in &complex.faces {
        by_size[f.count_ones() as usize].push(f);
    }
    // rank of the boundary C_k -> C_{k-1} for k = 1..=max_size
    let mut ranks = vec![0usize; max_size + 2];
    for k in 1..=max_size {
        let rows = &by_size[k - 1];
        let cols = &by_size[k];
        if rows.is_empty() || cols.is_empty() {
            continue;
        }
        let index: HashMap<u32, usize> = rows.iter().enumerate().map(|(r, &f)| (f, r)).collect();
        let mut entries = vec![0i64; rows.len() * cols.len()];
        for (c, &face) in cols.iter().enumerate() {
            let mut sign = 1i64;
            for bit in 0..32 {
                if face & (1 << bit) == 0 {
                    continue;
                }
                let r = index[&(face & !(1 << bit))];
                entries[r * cols.len() + c] = sign;
                sign = -sign;
            }
        }
        ranks[k] = field.rank(rows.len(), cols.len(), &entries);
    }
    let dims = (0..=max_size)
        .map(|k| (by_size[k].len() - ranks[k] - ranks[k + 1]) as u64)
        .collect();
    ReducedHomology(dims)
}

/// Distinct lcms of nonempty subsets of the minimal generators.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    let gens = ideal.generators();
    if gens.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    if gens.len() > MAX_GENERATORS {
        return Err(Error::TooManyGenerators {
            count: gens.len(),
            limit: MAX_GENERATORS,
        });
    }
    // closure of the generators under lcm with a generator
    let mut lattice: BTreeSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = gens.to_vec();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.lcm_unchecked(g);
            if lattice.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    Ok(lattice.into_iter().collect())
}

/// Upper Koszul complex `K^b(I)` on `supp(b)`.
pub fn koszul_complex(ideal: &MonomialIdeal, b: &Monomial) -> Result<SimplicialComplex> {
    let ground: Vec<usize> = b.support().into_iter().collect();
    if ground.len() > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge {
            size: ground.len(),
            limit: MAX_GROUND_SET,
        });
    }
    if !ideal.contains_monomial(b)? {
        return Ok(SimplicialComplex::void(ground));
    }
    let mut faces = BTreeSet::new();
    let mut exps = b.exponents().to_vec();
    for mask in 0u32..(1u32 << ground.len()) {
        for (k, &v) in ground.iter().enumerate() {
            exps[v - 1] = b.exponents()[v - 1] - u32::from(mask & (1 << k) != 0);
        }
        let u = Monomial::new(exps.clone())?;
        if ideal.contains_unchecked(&u) {
            faces.insert(mask);
        }
    }
    Ok(SimplicialComplex { ground, faces })
}

/// Nonzero multigraded Betti numbers `β_{i,b}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub characteristic: u64,
    pub entries: BTreeMap<(usize, Monomial), u64>,
}

#[derive(Debug, Clone, Serialize)]
struct BettiRow<'a> {
    i: usize,
    b: &'a [u32],
    degree: u64,
    beta: u64,
}

impl BettiTable {
    /// Entries in display order: `(|b|, i, b)` with `b` lexicographic.
    pub fn rows(&self) -> Vec<(usize, &Monomial, u64)> {
        let mut rows: Vec<(usize, &Monomial, u64)> =
            self.entries.iter().map(|((i, b), &v)| (*i, b, v)).collect();
        rows.sort_by(|x, y| {
            (x.1.degree(), x.0, x.1.exponents()).cmp(&(y.1.degree(), y.0, y.1.exponents()))
        });
        rows
    }

    /// Total Betti numbers `β_i = Σ_b β_{i,b}`.
    pub fn totals(&self) -> Vec<u64> {
        let mut totals = Vec::new();
        for ((i, _), &v) in &self.entries {
            if totals.len() <= *i {
                totals.resize(i + 1, 0);
            }
            totals[*i] += v;
        }
        totals
    }

    /// Graded Betti numbers `β_{i,j} = Σ_{|b| = j} β_{i,b}`.
    pub fn graded(&self) -> BTreeMap<(usize, u64), u64> {
        let mut out = BTreeMap::new();
        for ((i, b), &v) in &self.entries {
            *out.entry((*i, b.degree())).or_insert(0) += v;
        }
        out
    }

    /// `max{ |b| - i : β_{i,b} ≠ 0 }`.
    pub fn regularity(&self) -> Option<u64> {
        self.entries
            .keys()
            .map(|(i, b)| b.degree().saturating_sub(*i as u64))
            .max()
    }

    /// `Σ_i (-1)^i β_{i,b}` for each multidegree.
    pub fn euler_characteristics(&self) -> BTreeMap<Monomial, i64> {
        let mut out = BTreeMap::new();
        for ((i, b), &v) in &self.entries {
            let signed = if i % 2 == 0 { v as i64 } else { -(v as i64) };
            *out.entry(b.clone()).or_insert(0) += signed;
        }
        out
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, b, v) in self.rows() {
            let _ = writeln!(
                out,
                "i={i} b={} |b|={} beta={v}",
                b.vector_string(),
                b.degree()
            );
        }
        if let Some(r) = self.regularity() {
            let _ = writeln!(out, "reg={r} (char {})", self.characteristic);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<BettiRow<'_>> = self
            .rows()
            .into_iter()
            .map(|(i, b, beta)| BettiRow {
                i,
                b: b.exponents(),
                degree: b.degree(),
                beta,
            })
            .collect();
        serde_json::json!({
            "characteristic": self.characteristic,
            "rows": rows,
            "totals": self.totals(),
            "regularity": self.regularity(),
        })
    }
}

/// Multigraded Betti table over `field`.
pub fn betti_table(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    let lattice = lcm_lattice(ideal)?;
    let per_point: Vec<Vec<((usize, Monomial), u64)>> = lattice
        .par_iter()
        .map(|b| {
            let complex = koszul_complex(ideal, b)?;
            let homology = reduced_homology_dims(&complex, field);
            Ok(homology
                .0
                .iter()
                .enumerate()
                .filter(|(_, &v)| v > 0)
                .map(|(i, &v)| ((i, b.clone()), v))
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(BettiTable {
        characteristic: field.characteristic(),
        entries: per_point.into_iter().flatten().collect(),
    })
}

/// Castelnuovo–Mumford regularity `max{ j - i : β_{i,j} ≠ 0 }`.
pub fn regularity(ideal: &MonomialIdeal, field: Field) -> Result<u64> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    Ok(betti_table(ideal, field)?
        .regularity()
        .expect("a nonzero ideal has generators"))
}

/// `-Σ (-1)^{|S|}` over nonempty generator subsets `S`, keyed by `lcm(S)`.
///
/// This is the alternating sum of the Taylor complex, which equals
/// `Σ_i (-1)^i β_{i,b}` at every multidegree.
pub fn taylor_euler_characteristics(ideal: &MonomialIdeal) -> Result<BTreeMap<Monomial, i64>> {
    let gens = ideal.generators();
    if gens.len() > MAX_GENERATORS {
        return Err(Error::TooManyGenerators {
            count: gens.len(),
            limit: MAX_GENERATORS,
        });
    }
    let mut out: BTreeMap<Monomial, i64> = BTreeMap::new();
    let mut stack: Vec<(usize, Monomial, usize)> = gens
        .iter()
        .enumerate()
        .map(|(k, g)| (k, g.clone(), 1))
        .collect();
    while let Some((last, lcm, size)) = stack.pop() {
        // -(-1)^{|S|}
        *out.entry(lcm.clone()).or_insert(0) += if size % 2 == 1 { 1 } else { -1 };
        for (k, g) in gens.iter().enumerate().skip(last + 1) {
            stack.push((k, lcm.lcm_unchecked(g), size + 1));
        }
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

/// Whether the table's Euler characteristics match the Taylor-complex count
/// at every multidegree.
pub fn euler_consistency_check(ideal: &MonomialIdeal, table: &BettiTable) -> Result<bool> {
    let expected = taylor_euler_characteristics(ideal)?;
    let mut actual = table.euler_characteristics();
    actual.retain(|_, v| *v != 0);
    Ok(expected == actual)
}

/// Regularity of a hypergraph's dual compared against its `t` and `q` bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityBounds {
    pub reg: u64,
    pub t: u64,
    pub q: u64,
    pub deg: u64,
    pub m: usize,
    pub reg_le_t: bool,
    pub reg_lt_q: bool,
    pub t_le_q: bool,
    pub deg_le_t: bool,
    pub stable_at_t: bool,
}

impl RegularityBounds {
    pub fn all_hold(&self) -> bool {
        self.reg_le_t && self.reg_lt_q && self.t_le_q && self.deg_le_t && self.stable_at_t
    }
}

pub fn check_regularity_bounds(h: &IncreasingHypergraph, field: Field) -> Result<RegularityBounds> {
    let dual = h.special_dual()?.ideal;
    let (canon, _) = h.canonical_vertex_order();
    let r = canon.covered().len();
    let canon_dual = canon
        .special_dual()?
        .ideal
        .restrict(r)
        .expect("dual lives on covered vertices");
    let t = t_bound(h.containment_vector().entries())?;
    let q = q_bound(&canon_dual)?;
    let deg = dual.max_degree()?;
    let m = canon_dual.max_index()?;
    let stable_at_t = is_stable(&canon_dual.truncate(t)?)?.is_stable;
    let reg = regularity(&dual, field)?;
    Ok(RegularityBounds {
        reg,
        t,
        q,
        deg,
        m,
        reg_le_t: reg <= t,
        reg_lt_q: reg < q,
        t_le_q: t <= q,
        deg_le_t: deg <= t,
        stable_at_t,
    })
}

/// If `e >= deg(I)` and `I_{>=e}` is stable, whether `reg(I) <= e`.
/// `None` when the hypotheses fail.
pub fn check_stable_truncation_bound(
    ideal: &MonomialIdeal,
    e: u64,
    field: Field,
) -> Result<Option<bool>> {
    if e < ideal.max_degree()? || !is_stable(&ideal.truncate(e)?)?.is_stable {
        return Ok(None);
    }
    Ok(Some(regularity(ideal, field)? <= e))
}

/// Graded Betti numbers `β_{i,i+j}` of a stable ideal from the
/// Eliahou–Kervaire formula `Σ_{u ∈ G(I), deg u = j} C(m(u) - 1, i)`.
/// Keys match [`BettiTable::graded`]. No lattice guard applies.
pub fn eliahou_kervaire_graded(ideal: &MonomialIdeal) -> Result<BTreeMap<(usize, u64), u64>> {
    let report = is_stable(ideal)?;
    if !report.is_stable {
        return Err(Error::Hypothesis("ideal is not stable".into()));
    }
    let mut out = BTreeMap::new();
    for u in ideal.generators() {
        let m = u.max_index()?;
        let mut c: u64 = 1;
        for i in 0..m {
            *out.entry((i, u.degree() + i as u64)).or_insert(0) += c;
            c = c * (m - 1 - i) as u64 / (i as u64 + 1);
        }
    }
    Ok(out)
}

/// Regularity of a stable ideal: its largest generator degree.
pub fn eliahou_kervaire_regularity(ideal: &MonomialIdeal) -> Result<u64> {
    eliahou_kervaire_graded(ideal)?
        .keys()
        .map(|&(i, d)| d - i as u64)
        .max()
        .ok_or(Error::ZeroIdeal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec()).unwrap()
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimize(n, gens.iter().map(|g| m(g))).unwrap()
    }

    fn remark_ideal() -> MonomialIdeal {
        ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[1, 0, 1], &[0, 1, 1]])
    }

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn lattice_examples() {
        let max2 = MonomialIdeal::maximal(2).unwrap();
        assert_eq!(
            lcm_lattice(&max2).unwrap(),
            vec![m(&[1, 0]), m(&[0, 1]), m(&[1, 1])]
        );
        let lattice = lcm_lattice(&remark_ideal()).unwrap();
        assert_eq!(lattice.len(), 11);
        for b in [[1, 1, 1], [2, 2, 0], [2, 2, 1]] {
            assert!(lattice.contains(&m(&b)));
        }
        let principal = ideal(2, &[&[3, 1]]);
        assert_eq!(lcm_lattice(&principal).unwrap(), vec![m(&[3, 1])]);

        let many = MonomialIdeal::maximal(21).unwrap();
        assert_eq!(
            lcm_lattice(&many),
            Err(Error::TooManyGenerators {
                count: 21,
                limit: 20
            })
        );
    }

    #[test]
    fn koszul_examples() {
        let k = koszul_complex(&remark_ideal(), &m(&[1, 1, 1])).unwrap();
        assert_eq!(k.faces(), vec![vec![], vec![1], vec![2]]);
        let k = koszul_complex(&remark_ideal(), &m(&[2, 2, 1])).unwrap();
        assert_eq!(
            k.faces(),
            vec![
                vec![],
                vec![1],
                vec![2],
                vec![3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert!(k.is_downward_closed());
        let k = koszul_complex(&remark_ideal(), &m(&[1, 0, 1])).unwrap();
        assert_eq!(k.faces(), vec![Vec::<usize>::new()]);
        let k = koszul_complex(&remark_ideal(), &m(&[1, 1, 0])).unwrap();
        assert!(k.is_void());
    }

    #[test]
    fn homology_examples() {
        let q = Field::Rational;
        let two_points = SimplicialComplex::from_facets(vec![1, 2], &[vec![1], vec![2]]).unwrap();
        assert_eq!(
            reduced_homology_dims(&two_points, q),
            ReducedHomology(vec![0, 1])
        );
        let hollow =
            SimplicialComplex::from_facets(vec![1, 2, 3], &[vec![1, 2], vec![1, 3], vec![2, 3]])
                .unwrap();
        let h = reduced_homology_dims(&hollow, q);
        assert_eq!((h.dim(-1), h.dim(0), h.dim(1)), (0, 0, 1));
        let full = SimplicialComplex::from_facets(vec![1, 2, 3], &[vec![1, 2, 3]]).unwrap();
        assert!(reduced_homology_dims(&full, q).is_zero());
        let void = SimplicialComplex::void(vec![1]);
        assert!(reduced_homology_dims(&void, q).is_zero());
        let irrelevant = SimplicialComplex::from_facets(vec![1], &[vec![]]).unwrap();
        assert_eq!(reduced_homology_dims(&irrelevant, q).dim(-1), 1);
        // octahedron boundary: a 2-sphere
        let oct = SimplicialComplex::from_facets(
            (1..=6).collect(),
            &[
                vec![1, 3, 5],
                vec![1, 3, 6],
                vec![1, 4, 5],
                vec![1, 4, 6],
                vec![2, 3, 5],
                vec![2, 3, 6],
                vec![2, 4, 5],
                vec![2, 4, 6],
            ],
        )
        .unwrap();
        let h = reduced_homology_dims(&oct, q);
        assert_eq!(h.0, vec![0, 0, 0, 1]);
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // six-vertex triangulation of RP^2
        let facets = vec![
            vec![1, 2, 3],
            vec![1, 3, 4],
            vec![1, 4, 5],
            vec![1, 5, 6],
            vec![1, 2, 6],
            vec![2, 3, 5],
            vec![3, 4, 6],
            vec![2, 4, 5],
            vec![3, 5, 6],
            vec![2, 4, 6],
        ];
        let rp2 = SimplicialComplex::from_facets((1..=6).collect(), &facets).unwrap();
        assert!(reduced_homology_dims(&rp2, Field::Rational).is_zero());
        let h2 = reduced_homology_dims(&rp2, Field::Prime(2));
        assert_eq!((h2.dim(1), h2.dim(2)), (1, 1));
    }

    #[test]
    fn betti_examples() {
        let table = betti_table(&remark_ideal(), Field::Rational).unwrap();
        assert_eq!(table.totals(), vec![4, 4, 1]);
        let ones: Vec<Monomial> = table
            .entries
            .keys()
            .filter(|(i, _)| *i == 1)
            .map(|(_, b)| b.clone())
            .collect();
        let mut expected = vec![m(&[1, 1, 1]), m(&[2, 0, 1]), m(&[0, 2, 1]), m(&[2, 2, 0])];
        expected.sort();
        assert_eq!(ones, expected);
        assert_eq!(table.entries.get(&(2, m(&[2, 2, 1]))), Some(&1));
        assert!(euler_consistency_check(&remark_ideal(), &table).unwrap());

        let principal = ideal(3, &[&[2, 0, 1]]);
        let t = betti_table(&principal, Field::Rational).unwrap();
        assert_eq!(t.entries.len(), 1);
        assert_eq!(t.entries.get(&(0, m(&[2, 0, 1]))), Some(&1));

        for n in 1..=5u64 {
            let max = MonomialIdeal::maximal(n as usize).unwrap();
            let t = betti_table(&max, Field::Rational).unwrap();
            let expected: Vec<u64> = (0..n).map(|i| binomial(n, i + 1)).collect();
            assert_eq!(t.totals(), expected);
        }
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(regularity(&remark_ideal(), Field::Rational).unwrap(), 3);
        assert_eq!(
            regularity(&MonomialIdeal::maximal(4).unwrap(), Field::Rational).unwrap(),
            1
        );
        assert_eq!(
            regularity(&ideal(3, &[&[2, 3, 0]]), Field::Rational).unwrap(),
            5
        );
        assert_eq!(
            regularity(&MonomialIdeal::zero(2).unwrap(), Field::Rational),
            Err(Error::ZeroIdeal)
        );
    }

    #[test]
    fn euler_examples() {
        let principal = ideal(2, &[&[1, 1]]);
        let taylor = taylor_euler_characteristics(&principal).unwrap();
        assert_eq!(taylor.get(&m(&[1, 1])), Some(&1));
        let max2 = MonomialIdeal::maximal(2).unwrap();
        let taylor = taylor_euler_characteristics(&max2).unwrap();
        assert_eq!(taylor.get(&m(&[1, 1])), Some(&-1));
        let table = betti_table(&max2, Field::Rational).unwrap();
        assert!(euler_consistency_check(&max2, &table).unwrap());

        let mut broken = betti_table(&remark_ideal(), Field::Rational).unwrap();
        broken.entries.remove(&(2, m(&[2, 2, 1])));
        assert!(!euler_consistency_check(&remark_ideal(), &broken).unwrap());
    }

    #[test]
    fn render_format() {
        let table = betti_table(&MonomialIdeal::maximal(2).unwrap(), Field::Rational).unwrap();
        assert_eq!(
            table.render(),
            "i=0 b=[0,1] |b|=1 beta=1\ni=0 b=[1,0] |b|=1 beta=1\ni=1 b=[1,1] |b|=2 beta=1\nreg=1 (char 0)\n"
        );
    }

    #[test]
    fn bounds_examples() {
        let h1 = IncreasingHypergraph::new(3, 1, vec![vec![1, 2], vec![1, 2, 3]]).unwrap();
        let b = check_regularity_bounds(&h1, Field::Rational).unwrap();
        assert_eq!((b.reg, b.t, b.q), (3, 3, 4));
        assert!(b.all_hold());

        let h0 = IncreasingHypergraph::new(4, 1, vec![vec![1, 2], vec![1, 2, 3], vec![1, 2, 3, 4]])
            .unwrap();
        let b = check_regularity_bounds(&h0, Field::Rational).unwrap();
        assert_eq!((b.t, b.q), (6, 9));
        assert!(b.reg <= 6);
        assert!(b.all_hold());

        let single = IncreasingHypergraph::new(2, 1, vec![vec![1, 2]]).unwrap();
        let b = check_regularity_bounds(&single, Field::Rational).unwrap();
        assert_eq!((b.reg, b.t), (1, 1));
    }

    #[test]
    fn stable_truncation_bound() {
        let r = remark_ideal();
        assert_eq!(
            check_stable_truncation_bound(&r, 3, Field::Rational).unwrap(),
            Some(true)
        );
        assert_eq!(
            check_stable_truncation_bound(&r, 1, Field::Rational).unwrap(),
            None
        );
    }

    #[test]
    fn padding_keeps_regularity() {
        let r = remark_ideal();
        let padded = r.extend_ambient(5);
        assert_eq!(
            regularity(&r, Field::Rational).unwrap(),
            regularity(&padded, Field::Rational).unwrap()
        );
    }

    #[test]
    fn eliahou_kervaire_examples() {
        let m3 = MonomialIdeal::maximal(3).unwrap();
        let ek = eliahou_kervaire_graded(&m3).unwrap();
        assert_eq!(ek, betti_table(&m3, Field::Rational).unwrap().graded());
        let pp = MonomialIdeal::pure_powers(&[2, 2, 1])
            .unwrap()
            .truncate(3)
            .unwrap();
        assert_eq!(eliahou_kervaire_regularity(&pp).unwrap(), 3);
        assert!(matches!(
            eliahou_kervaire_graded(&remark_ideal()),
            Err(Error::Hypothesis(_))
        ));
    }

    /// Closes a generating set under `u -> u * x_i / x_j` for `i < j`.
    fn strongly_stable_closure(n: usize, seeds: &[Vec<u32>]) -> MonomialIdeal {
        let mut seen: BTreeSet<Vec<u32>> = seeds.iter().cloned().collect();
        let mut stack: Vec<Vec<u32>> = seeds.to_vec();
        while let Some(u) = stack.pop() {
            for j in 0..n {
                if u[j] == 0 {
                    continue;
                }
                for i in 0..j {
                    let mut v = u.clone();
                    v[j] -= 1;
                    v[i] += 1;
                    if seen.insert(v.clone()) {
                        stack.push(v);
                    }
                }
            }
        }
        MonomialIdeal::minimize(n, seen.into_iter().map(|v| m(&v))).unwrap()
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(48))]
        #[test]
        fn eliahou_kervaire_matches_homology(
            seeds in proptest::collection::vec(proptest::collection::vec(0u32..3, 3), 1..3)
        ) {
            let seeds: Vec<Vec<u32>> = seeds.into_iter().filter(|v| v.iter().any(|&e| e > 0)).collect();
            proptest::prop_assume!(!seeds.is_empty());
            let ideal = strongly_stable_closure(3, &seeds);
            proptest::prop_assume!(ideal.generators().len() <= MAX_GENERATORS);
            let table = betti_table(&ideal, Field::Rational).unwrap();
            proptest::prop_assert_eq!(eliahou_kervaire_graded(&ideal).unwrap(), table.graded());
        }
    }

    #[test]
    fn four_vertex_chain_dual_reaches_t() {
        let h =
            IncreasingHypergraph::new(4, 1, [vec![1, 2], vec![1, 2, 3], vec![1, 2, 3, 4]]).unwrap();
        let dual = h.special_dual().unwrap().ideal;
        // K^b at b = (3,3,2,0) is the boundary of a triangle.
        let b = m(&[3, 3, 2, 0]);
        let k = koszul_complex(&dual, &b).unwrap();
        assert_eq!(k.faces().len(), 7);
        let table = betti_table(&dual, Field::Rational).unwrap();
        assert_eq!(table.entries.get(&(2, b)), Some(&1));
        assert_eq!(table.regularity(), Some(6));
        let bounds = check_regularity_bounds(&h, Field::Rational).unwrap();
        assert_eq!((bounds.reg, bounds.t, bounds.q), (6, 6, 9));
    }
}
