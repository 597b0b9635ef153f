//! Local cohomology tables: the nonzero graded pieces over the canonical
//! degree box, plus depth and dimension read off from them.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::FieldSpec;
use crate::monomial::{MonomialIdeal, MultiDegree};

/// Nonzero graded pieces of `H^•_m(S/I)` over the canonical box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcTable {
    pub ideal: MonomialIdeal,
    pub field: FieldSpec,
    pub entries: BTreeMap<(MultiDegree, i64), usize>,
}

#[derive(Serialize, Deserialize)]
struct TableEntryJson {
    degree: Vec<i64>,
    i: i64,
    dim: usize,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    vars: Vec<String>,
    field: String,
    entries: Vec<TableEntryJson>,
}

impl LcTable {
    /// Assembles a table from per-degree index maps, dropping zeros.
    pub fn from_rows(
        ideal: MonomialIdeal,
        field: FieldSpec,
        rows: impl IntoIterator<Item = (MultiDegree, BTreeMap<i64, usize>)>,
    ) -> Self {
        let entries = rows
            .into_iter()
            .flat_map(|(a, dims)| {
                dims.into_iter()
                    .filter(|&(_, d)| d > 0)
                    .map(move |(i, d)| ((a.clone(), i), d))
            })
            .collect();
        LcTable {
            ideal,
            field,
            entries,
        }
    }

    pub fn get(&self, a: &MultiDegree, i: i64) -> usize {
        self.entries.get(&(a.clone(), i)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Indices `i` with some nonzero entry, ascending.
    pub fn indices(&self) -> Vec<i64> {
        self.entries
            .keys()
            .map(|(_, i)| *i)
            .sorted()
            .dedup()
            .collect()
    }

    pub fn to_json(&self) -> String {
        let doc = TableJson {
            vars: self.ideal.var_names().to_vec(),
            field: self.field.to_string(),
            entries: self
                .entries
                .iter()
                .map(|((a, i), &dim)| TableEntryJson {
                    degree: a.entries().to_vec(),
                    i: *i,
                    dim,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("table serializes")
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("degree\ti\tdim\n");
        for ((a, i), dim) in &self.entries {
            let degree = a.entries().iter().join(",");
            out.push_str(&format!("{degree}\t{i}\t{dim}\n"));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "local cohomology of S/I over {}, vars {}\n",
            self.field,
            self.ideal.var_names().join(" ")
        );
        if self.entries.is_empty() {
            out.push_str("(all graded pieces vanish)\n");
        }
        for ((a, i), dim) in &self.entries {
            out.push_str(&format!("H^{i} at {a}: {dim}\n"));
        }
        out
    }
}

/// Depth and Krull dimension of `S/I`, read off as the smallest and largest
/// nonvanishing local cohomology index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DepthDim {
    pub depth: usize,
    pub dim: usize,
}

impl DepthDim {
    pub fn is_cohen_macaulay(&self) -> bool {
        self.depth == self.dim
    }
}

pub fn depth_and_dim_from_table(table: &LcTable) -> Result<DepthDim> {
    let idx = table.indices();
    match (idx.first(), idx.last()) {
        (Some(&lo), Some(&hi)) => Ok(DepthDim {
            depth: lo as usize,
            dim: hi as usize,
        }),
        _ => Err(Error::Domain("S/I is the zero ring".into())),
    }
}
