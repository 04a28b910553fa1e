//! Uniformly increasing hypergraphs: a strictly nested chain of edges
//! `E_1 ⊂ E_2 ⊂ ... ⊂ E_s` with `|E_1| >= 2` and `|E_{i+1}| = |E_i| + d`.
//!
//! Each one carries a containment vector, an inclusion ideal and the
//! Alexander dual of that ideal with respect to the containment vector.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{intersect_components, IrreducibleComponent, MonomialIdeal};
use crate::monomial::Monomial;

/// A validated uniformly increasing hypergraph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncreasingHypergraph {
    n: usize,
    d: usize,
    edges: Vec<BTreeSet<usize>>,
}

/// On-disk shape: `{"n": 4, "d": 1, "edges": [[1,2],[1,2,3],[1,2,3,4]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphSpec {
    pub n: usize,
    pub d: usize,
    pub edges: Vec<Vec<usize>>,
}

impl IncreasingHypergraph {
    pub fn new<E, V>(n: usize, d: usize, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = V>,
        V: IntoIterator<Item = usize>,
    {
        if n == 0 {
            return Err(Error::EmptyAmbient);
        }
        if d == 0 {
            return Err(Error::ZeroIncrement);
        }
        let edges: Vec<BTreeSet<usize>> =
            edges.into_iter().map(|e| e.into_iter().collect()).collect();
        if edges.is_empty() {
            return Err(Error::NoEdges);
        }
        for (k, edge) in edges.iter().enumerate() {
            if let Some(&v) = edge.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::VertexOutOfRange {
                    edge: k + 1,
                    vertex: v,
                    n,
                });
            }
        }
        if edges[0].len() < 2 {
            return Err(Error::FirstEdgeTooSmall {
                size: edges[0].len(),
            });
        }
        for (k, pair) in edges.windows(2).enumerate() {
            if !(pair[0].is_subset(&pair[1]) && pair[0].len() < pair[1].len()) {
                return Err(Error::NotNested { index: k + 1 });
            }
            let found = pair[1].len() as i64 - pair[0].len() as i64;
            if found != d as i64 {
                return Err(Error::IncrementMismatch {
                    index: k + 1,
                    expected: d,
                    found,
                });
            }
        }
        Ok(Self { n, d, edges })
    }

    pub fn from_spec(spec: &HypergraphSpec) -> Result<Self> {
        Self::new(spec.n, spec.d, spec.edges.iter().map(|e| e.iter().copied()))
    }

    pub fn to_spec(&self) -> HypergraphSpec {
        HypergraphSpec {
            n: self.n,
            d: self.d,
            edges: self
                .edges
                .iter()
                .map(|e| e.iter().copied().collect())
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of edges `s`.
    pub fn s(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[BTreeSet<usize>] {
        &self.edges
    }

    /// Vertices of the largest edge `E_s`.
    pub fn covered(&self) -> &BTreeSet<usize> {
        self.edges.last().expect("at least one edge")
    }

    /// Whether some vertex lies in no edge.
    pub fn has_uncovered_vertices(&self) -> bool {
        self.covered().len() < self.n
    }

    /// Index (1-based) of the first edge containing `v`.
    pub fn first_edge(&self, v: usize) -> Option<usize> {
        self.edges
            .iter()
            .position(|e| e.contains(&v))
            .map(|k| k + 1)
    }

    /// Relabels vertices block by block: `E_1` first, then `E_2 ∖ E_1`, and so
    /// on, with edge-free vertices last. Ascending original index within a block.
    pub fn canonical_vertex_order(&self) -> (Self, Relabeling) {
        let mut order: Vec<usize> = Vec::with_capacity(self.n);
        let mut seen = BTreeSet::new();
        for edge in &self.edges {
            for &v in edge {
                if seen.insert(v) {
                    order.push(v);
                }
            }
        }
        order.extend((1..=self.n).filter(|v| !seen.contains(v)));
        let mut old_to_new = vec![0; self.n];
        for (k, &old) in order.iter().enumerate() {
            old_to_new[old - 1] = k + 1;
        }
        let relabeling = Relabeling { old_to_new };
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| relabeling.apply(v)).collect())
            .collect();
        (
            Self {
                n: self.n,
                d: self.d,
                edges,
            },
            relabeling,
        )
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical_vertex_order().1.is_identity()
    }

    /// `a_i = |{j : i ∈ E_j}|`.
    pub fn containment_vector(&self) -> ContainmentVector {
        let mut entries = vec![0u32; self.n];
        for edge in &self.edges {
            for &v in edge {
                entries[v - 1] += 1;
            }
        }
        ContainmentVector(entries)
    }

    /// Generator exponent vectors `b_i`: `s - i + 1` on `E_i`, 0 elsewhere.
    pub fn inclusion_exponents(&self) -> Vec<Vec<u32>> {
        let s = self.s();
        self.edges
            .iter()
            .enumerate()
            .map(|(k, edge)| {
                let power = (s - k) as u32;
                let mut b = vec![0u32; self.n];
                for &v in edge {
                    b[v - 1] = power;
                }
                b
            })
            .collect()
    }

    /// The inclusion ideal, minimally generated by one monomial per edge.
    pub fn inclusion_ideal(&self) -> Result<MonomialIdeal> {
        let gens = self
            .inclusion_exponents()
            .into_iter()
            .map(Monomial::new)
            .collect::<Result<Vec<_>>>()?;
        let ideal = MonomialIdeal::minimize(self.n, gens)?;
        assert_eq!(
            ideal.generators().len(),
            self.s(),
            "edge monomials must be minimal generators"
        );
        Ok(ideal)
    }

    /// Whether every `b_i` is componentwise below the containment vector.
    pub fn generators_below_containment(&self) -> bool {
        let a = self.containment_vector();
        self.inclusion_exponents()
            .iter()
            .all(|b| b.iter().zip(a.entries()).all(|(bi, ai)| bi <= ai))
    }

    /// Alexander dual of the inclusion ideal with respect to the containment
    /// vector, with its irreducible components `m^{a∖b_i}` in edge order.
    pub fn special_dual(&self) -> Result<SpecialDual> {
        let a = self.containment_vector();
        assert!(
            self.generators_below_containment(),
            "inclusion generators must divide x^a"
        );
        let inclusion = self.inclusion_ideal()?;
        // Components follow edge order, not the canonical generator order.
        let by_generator = inclusion.alexander_dual_components(a.entries())?;
        let mut components = Vec::with_capacity(self.s());
        for b in self.inclusion_exponents() {
            let generator = Monomial::new(b)?;
            let pos = inclusion
                .generators()
                .iter()
                .position(|g| *g == generator)
                .expect("edge monomial is a generator");
            components.push(by_generator[pos].clone());
        }
        let ideal = intersect_components(self.n, &components)?;
        Ok(SpecialDual {
            inclusion,
            ideal,
            components,
        })
    }

    /// Seeded instance: a uniformly shuffled vertex order (Fisher–Yates on a
    /// ChaCha8 stream from `seed`) whose first 2 vertices form `E_1`, each
    /// later edge adding the next `d`.
    pub fn random_instance(n: usize, d: usize, s: usize, seed: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroIncrement);
        }
        if s == 0 {
            return Err(Error::NoEdges);
        }
        if 2 + (s - 1) * d > n {
            return Err(Error::Infeasible { n, d, s });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut vertices: Vec<usize> = (1..=n).collect();
        for k in (1..n).rev() {
            let j = rng.gen_range(0..=k);
            vertices.swap(k, j);
        }
        let edges = (0..s).map(|i| vertices[..2 + i * d].to_vec());
        Self::new(n, d, edges)
    }
}

/// Vertex relabeling produced by [`IncreasingHypergraph::canonical_vertex_order`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relabeling {
    /// `old_to_new[v - 1]` is the new label of old vertex `v`.
    pub old_to_new: Vec<usize>,
}

impl Relabeling {
    pub fn apply(&self, v: usize) -> usize {
        self.old_to_new[v - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.old_to_new.iter().enumerate().all(|(k, &v)| v == k + 1)
    }
}

/// Per-vertex edge counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContainmentVector(pub Vec<u32>);

impl ContainmentVector {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }
}

/// The dual of an inclusion ideal together with its defining components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialDual {
    pub inclusion: MonomialIdeal,
    pub ideal: MonomialIdeal,
    pub components: Vec<IrreducibleComponent>,
}
