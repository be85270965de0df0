use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::{check_bounded, covers, Direction};
use crate::error::Result;
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// Principal order ideal below a partition.
    Ideal(Partition),
    /// Every k-bounded partition up to a degree.
    Graded { max_degree: usize },
}

/// Ranked cover graph over a set of partitions.
///
/// Vertices are grouped by degree and sorted lexicographically within each
/// rank; vertex indices refer to the flattened rank-by-rank order. Every edge
/// goes from a vertex to one that covers it.
#[derive(Clone, Debug)]
pub struct HasseDiagram {
    k: usize,
    generator: Generator,
    ranks: Vec<Vec<Partition>>,
    edges: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    index: HashMap<Vec<u8>, usize>,
}

#[derive(Serialize)]
struct DiagramJson<'a> {
    k: usize,
    ranks: &'a [Vec<Partition>],
    edges: Vec<[usize; 2]>,
}

impl HasseDiagram {
    fn assemble(
        k: usize,
        generator: Generator,
        levels: Vec<BTreeSet<Partition>>,
        raw_edges: Vec<(Partition, Partition)>,
    ) -> Self {
        let ranks: Vec<Vec<Partition>> = levels.into_iter().map(|l| l.into_iter().collect()).collect();
        let mut index = HashMap::new();
        for (i, p) in ranks.iter().flatten().enumerate() {
            index.insert(p.key(), i);
        }
        let mut edges: Vec<(usize, usize)> = raw_edges
            .iter()
            .map(|(lo, hi)| (index[&lo.key()], index[&hi.key()]))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let mut up = vec![Vec::new(); index.len()];
        for &(from, to) in &edges {
            up[from].push(to);
        }
        HasseDiagram { k, generator, ranks, edges, up, index }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &Generator {
        &self.generator
    }

    pub fn ranks(&self) -> &[Vec<Partition>] {
        &self.ranks
    }

    pub fn rank_sizes(&self) -> Vec<usize> {
        self.ranks.iter().map(Vec::len).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.index.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Partition> {
        self.ranks.iter().flatten()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(&p.key()).copied()
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.index.contains_key(&p.key())
    }

    /// Cover edges as `(lower, upper)` vertex indices, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Indices of the vertices covering vertex `i`.
    pub fn up_neighbors(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn to_json(&self) -> String {
        let payload = DiagramJson {
            k: self.k,
            ranks: &self.ranks,
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        };
        serde_json::to_string(&payload).expect("diagram serialises")
    }

    /// Graphviz rendering: one box per partition, one cluster per rank,
    /// edges pointing upward.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let title = match &self.generator {
            Generator::Ideal(p) => format!("ideal of {p}, k={}", self.k),
            Generator::Graded { max_degree } => format!("k={} up to degree {max_degree}", self.k),
        };
        let _ = writeln!(out, "digraph kyoung {{");
        let _ = writeln!(out, "  label=\"{title}\";");
        let _ = writeln!(out, "  rankdir=BT;");
        let _ = writeln!(out, "  node [shape=box];");
        let mut i = 0;
        for (rank, level) in self.ranks.iter().enumerate() {
            let _ = write!(out, "  subgraph rank_{rank} {{ rank=same;");
            for p in level {
                let _ = write!(out, " v{i} [label=\"{p}\"];");
                i += 1;
            }
            let _ = writeln!(out, " }}");
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  v{a} -> v{b};");
        }
        out.push_str("}\n");
        out
    }
}

/// Expands one rank in parallel; the merged level is sorted before use so
/// the result does not depend on scheduling.
fn expand(
    level: &BTreeSet<Partition>,
    k: usize,
    direction: Direction,
) -> Result<Vec<(Partition, Vec<Partition>)>> {
    let items: Vec<&Partition> = level.iter().collect();
    items
        .par_iter()
        .map(|p| covers(p, k, direction).map(|c| ((*p).clone(), c)))
        .collect()
}

/// The principal order ideal `{μ : μ ⪯ generator}` with all its covers.
pub fn build_ideal(generator: &Partition, k: usize) -> Result<HasseDiagram> {
    check_bounded(generator, k)?;
    let top = generator.degree();
    let mut levels = vec![BTreeSet::new(); top + 1];
    levels[top].insert(generator.clone());
    let mut edges = Vec::new();
    for d in (1..=top).rev() {
        for (upper, lowers) in expand(&levels[d], k, Direction::Down)? {
            for lower in lowers {
                levels[d - 1].insert(lower.clone());
                edges.push((lower, upper.clone()));
            }
        }
    }
    Ok(HasseDiagram::assemble(k, Generator::Ideal(generator.clone()), levels, edges))
}

/// All k-bounded partitions of degree at most `max_degree` with their covers.
pub fn build_graded(k: usize, max_degree: usize) -> Result<HasseDiagram> {
    check_bounded(&Partition::empty(), k)?;
    let mut levels = vec![BTreeSet::new(); max_degree + 1];
    levels[0].insert(Partition::empty());
    let mut edges = Vec::new();
    for d in 0..max_degree {
        for (lower, uppers) in expand(&levels[d], k, Direction::Up)? {
            for upper in uppers {
                levels[d + 1].insert(upper.clone());
                edges.push((lower.clone(), upper));
            }
        }
    }
    Ok(HasseDiagram::assemble(k, Generator::Graded { max_degree }, levels, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::partition::partitions_in_box;

    #[test]
    fn small_ideals() {
        let d = build_ideal(&Partition::rectangle(3, 3), 5).unwrap();
        assert_eq!(d.vertex_count(), 20);
        assert_eq!(d.vertex_count(), partitions_in_box(3, 3).len());

        let chain = build_ideal(&Partition::rectangle(3, 3), 3).unwrap();
        assert_eq!(chain.rank_sizes(), vec![1; 10]);
        assert_eq!(chain.edges().len(), 9);

        let one = build_ideal(&partition![1], 7).unwrap();
        assert_eq!(one.vertex_count(), 2);
        assert_eq!(one.edges(), &[(0, 1)]);
    }

    #[test]
    fn ideal_top_rank_is_the_generator() {
        let g = partition![4, 2, 1, 1];
        let d = build_ideal(&g, 4).unwrap();
        assert_eq!(d.ranks().last().unwrap(), &vec![g.clone()]);
        assert_eq!(d.ranks()[0], vec![Partition::empty()]);
    }

    #[test]
    fn graded_rank_sizes() {
        let d = build_graded(1, 4).unwrap();
        assert_eq!(d.rank_sizes(), vec![1; 5]);
        assert!(d.vertices().zip(0..).all(|(p, i)| *p == Partition::rectangle(1, i)));
        assert_eq!(build_graded(2, 4).unwrap().rank_sizes(), vec![1, 1, 2, 2, 3]);
        assert_eq!(build_graded(3, 3).unwrap().rank_sizes(), vec![1, 1, 2, 3]);
    }

    #[test]
    fn edges_increase_degree_by_one() {
        for d in [build_graded(3, 8).unwrap(), build_ideal(&partition![3, 3, 2, 1], 3).unwrap()] {
            let flat: Vec<_> = d.vertices().cloned().collect();
            for &(a, b) in d.edges() {
                assert_eq!(flat[a].degree() + 1, flat[b].degree());
            }
        }
    }

    #[test]
    fn exports_are_reproducible() {
        let a = build_ideal(&Partition::rectangle(3, 3), 4).unwrap();
        let b = build_ideal(&Partition::rectangle(3, 3), 4).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_dot(), b.to_dot());
    }

    #[test]
    fn json_shape() {
        let d = build_ideal(&partition![1, 1], 2).unwrap();
        assert_eq!(d.to_json(), r#"{"k":2,"ranks":[[[]],[[1]],[[1,1]]],"edges":[[0,1],[1,2]]}"#);
    }

    #[test]
    fn dot_shape() {
        let d = build_ideal(&Partition::rectangle(3, 3), 3).unwrap();
        let dot = d.to_dot();
        assert_eq!(dot.matches("[label=").count(), 10);
        assert_eq!(dot.matches("rank=same").count(), 10);
        assert_eq!(dot.matches(" -> ").count(), 9);
        assert!(dot.contains("v0 [label=\"[]\"]"));
        assert!(dot.contains("[label=\"[3,3,3]\"]"));
    }
}
