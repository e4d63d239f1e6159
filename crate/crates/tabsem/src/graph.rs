//! Weighted digraphs: the edge-list text format, path weights, and all
//! pairs shortest paths with address sets.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matrix::{closure, Carrier, Closure, MemorizedCarrier, SquareMatrix};
use crate::memorized::MemorizedValue;
use crate::semiring::SemiringSpec;
use crate::table::DEFAULT_COLUMN_BUDGET;
use crate::value::ExtendedReal;
use crate::word::{Letter, Word};

/// One arrow: tail and head as state indices, a nonnegative weight, and
/// the letter addressing it.
#[derive(Debug, Clone, PartialEq)]
pub struct Arrow {
    pub tail: usize,
    pub head: usize,
    pub weight: ExtendedReal,
    pub label: Letter,
}

/// A directed graph with weighted, uniquely labeled arrows.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct WeightedGraph {
    states: Vec<String>,
    arrows: Vec<Arrow>,
}

impl WeightedGraph {
    /// Validates that arrows point at declared states, weights are
    /// nonnegative, and labels are pairwise distinct.
    pub fn new(states: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = HashMap::new();
        for arrow in &arrows {
            if arrow.tail >= states.len() || arrow.head >= states.len() {
                return Err(Error::NoSuchArrow(arrow.tail.max(arrow.head)));
            }
            if arrow.weight.get() < 0.0 {
                return Err(Error::NegativeWeight(arrow.weight.get()));
            }
            if seen.insert(arrow.label.clone(), ()).is_some() {
                return Err(Error::DuplicateLabel(arrow.label.to_string()));
            }
        }
        Ok(WeightedGraph { states, arrows })
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
    }

    /// Parses the edge-list format: one `tail head weight [label]` arrow
    /// per line, or a single token declaring an isolated state. `#`
    /// comment lines and blank lines are ignored. States register in
    /// first-mention order; unlabeled arrows get `e<k>` with k the 0-based
    /// arrow index.
    pub fn parse(text: &str) -> Result<Self> {
        let mut states: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut intern = |name: &str, states: &mut Vec<String>| -> usize {
            if let Some(&i) = index.get(name) {
                return i;
            }
            let i = states.len();
            states.push(name.to_string());
            index.insert(name.to_string(), i);
            i
        };

        let mut arrows = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                [lone] => {
                    intern(lone, &mut states);
                }
                [tail, head, weight] | [tail, head, weight, _] => {
                    let weight: ExtendedReal =
                        weight.parse().map_err(|e: Error| Error::Parse {
                            line: line_no,
                            message: e.to_string(),
                        })?;
                    if weight.get() < 0.0 {
                        return Err(Error::NegativeWeight(weight.get()));
                    }
                    let label = match fields.get(3) {
                        Some(token) => Letter::new(*token).map_err(|e| Error::Parse {
                            line: line_no,
                            message: e.to_string(),
                        })?,
                        None => Letter::new(format!("e{}", arrows.len())).expect("generated label"),
                    };
                    let tail = intern(tail, &mut states);
                    let head = intern(head, &mut states);
                    arrows.push(Arrow {
                        tail,
                        head,
                        weight,
                        label,
                    });
                }
                _ => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("expected `tail head weight [label]`, got `{line}`"),
                    });
                }
            }
        }
        // Re-validate as a whole so duplicate labels are caught wherever
        // they come from.
        WeightedGraph::new(states, arrows)
    }

    /// Canonical rendering: every state as a declaration line (preserving
    /// order for states no arrow mentions), then one line per arrow.
    /// `parse` of the result reproduces the graph exactly.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for state in &self.states {
            out.push_str(state);
            out.push('\n');
        }
        for arrow in &self.arrows {
            out.push_str(&format!(
                "{} {} {} {}\n",
                self.states[arrow.tail], self.states[arrow.head], arrow.weight, arrow.label
            ));
        }
        out
    }
}

/// Tail, head, and composed weight of a chained arrow sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct PathWeight {
    pub tail: String,
    pub head: String,
    pub weight: ExtendedReal,
}

/// Composes the weights of consecutive arrows (given by index) with the
/// spec's multiplication. Arrows must chain head to tail.
pub fn path_weight(
    graph: &WeightedGraph,
    arrow_indices: &[usize],
    spec: &SemiringSpec,
) -> Result<PathWeight> {
    let arrows: Vec<&Arrow> = arrow_indices
        .iter()
        .map(|&i| graph.arrows().get(i).ok_or(Error::NoSuchArrow(i)))
        .collect::<Result<_>>()?;
    let Some(first) = arrows.first() else {
        return Err(Error::EmptyPath);
    };
    let mut weight = first.weight;
    for (pos, pair) in arrows.windows(2).enumerate() {
        if pair[0].head != pair[1].tail {
            return Err(Error::BrokenPath {
                position: pos + 1,
                expected: graph.states()[pair[0].head].clone(),
                found: graph.states()[pair[1].tail].clone(),
            });
        }
        weight = spec.mul().apply(weight, pair[1].weight)?;
    }
    let last = arrows.last().expect("nonempty");
    Ok(PathWeight {
        tail: graph.states()[first.tail].clone(),
        head: graph.states()[last.head].clone(),
        weight,
    })
}

/// All pairs shortest paths with addresses.
#[derive(Debug, Clone, PartialEq)]
pub struct ApspResult {
    pub states: Vec<String>,
    pub matrix: SquareMatrix<MemorizedValue>,
    /// Squarings the closure needed to stabilize.
    pub squarings: usize,
}

impl ApspResult {
    pub fn entry(&self, i: usize, j: usize) -> &MemorizedValue {
        self.matrix.get(i, j)
    }
}

/// Solves the shortest path with addresses problem: entry (i,j) of the
/// result pairs the distance from i to j with the set of label words of
/// every minimum-weight path (the empty word stands for the trivial path
/// when staying put is optimal). Costs within `tie_epsilon` count as tied;
/// `budget` caps the address sets. Fails with [`Error::NoConvergence`]
/// when ties keep accumulating along cycles of zero weight.
pub fn apsp_with_addresses(
    graph: &WeightedGraph,
    tie_epsilon: f64,
    budget: usize,
) -> Result<ApspResult> {
    let n = graph.states().len();
    if n == 0 {
        return Ok(ApspResult {
            states: Vec::new(),
            matrix: SquareMatrix::filled(1, MemorizedValue::zero()),
            squarings: 0,
        });
    }
    let carrier = MemorizedCarrier {
        tie_epsilon,
        budget,
    };
    let mut adjacency = SquareMatrix::filled(n, MemorizedValue::zero());
    for arrow in graph.arrows() {
        let single = MemorizedValue::single(Word::single(arrow.label.clone()), arrow.weight)?;
        let folded = carrier.add(adjacency.get(arrow.tail, arrow.head), &single)?;
        adjacency.set(arrow.tail, arrow.head, folded);
    }
    let Closure { matrix, squarings } = closure(&adjacency, &carrier, 64)?;
    Ok(ApspResult {
        states: graph.states().to_vec(),
        matrix,
        squarings,
    })
}

/// [`apsp_with_addresses`] with exact ties and the default budget.
pub fn apsp(graph: &WeightedGraph) -> Result<ApspResult> {
    apsp_with_addresses(graph, 0.0, DEFAULT_COLUMN_BUDGET)
}
