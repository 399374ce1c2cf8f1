//! On-disk description of a quadratic set.

use quadset::QuadraticSet;
use serde::{Deserialize, Serialize};

/// JSON document naming a set either by its full `r`-table (entries
/// `[x, y, u, v]` meaning `r(x, y) = (u, v)`) or by a left action (one
/// permutation per generator, lri construction implied). Exactly one of the
/// two sources must be present.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_table: Option<Vec<[u8; 4]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_action: Option<Vec<Vec<u8>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ordering: Option<Vec<u8>>,
}

impl SetDocument {
    pub fn build(&self) -> Result<QuadraticSet, String> {
        let n = self.n;
        if n == 0 {
            return Err("n must be positive".into());
        }
        match (&self.r_table, &self.left_action) {
            (Some(_), Some(_)) => {
                Err("r_table and left_action are mutually exclusive".into())
            }
            (None, None) => Err("one of r_table or left_action is required".into()),
            (Some(entries), None) => {
                if entries.len() != n * n {
                    return Err(format!(
                        "r_table has {} entries, expected {}",
                        entries.len(),
                        n * n
                    ));
                }
                let mut table: Vec<Option<(u8, u8)>> = vec![None; n * n];
                for &[x, y, u, v] in entries {
                    if [x, y, u, v].iter().any(|&c| c as usize >= n) {
                        return Err(format!("entry [{x}, {y}, {u}, {v}] out of range"));
                    }
                    let slot = x as usize * n + y as usize;
                    if table[slot].replace((u, v)).is_some() {
                        return Err(format!("duplicate entry for pair ({x}, {y})"));
                    }
                }
                let table = table.into_iter().map(|e| e.unwrap()).collect();
                QuadraticSet::from_table(n, table).map_err(|e| e.to_string())
            }
            (None, Some(rows)) => {
                QuadraticSet::from_left_action(n, rows).map_err(|e| e.to_string())
            }
        }
    }

    /// Document reproducing `set` via its `r`-table.
    pub fn from_set(name: Option<String>, set: &QuadraticSet) -> Self {
        let n = set.n();
        let r_table = set
            .r_table()
            .iter()
            .enumerate()
            .map(|(idx, &(u, v))| [(idx / n) as u8, (idx % n) as u8, u, v])
            .collect();
        SetDocument {
            name,
            n,
            r_table: Some(r_table),
            left_action: None,
            ordering: None,
        }
    }
}
