//! Dual-graph JSON format:
//!
//! ```json
//! {"components": 2, "points": [[[0, "a1"], [1, "b1"]], [[0, "a2"], [1, "b2"]]]}
//! ```
//!
//! Component indices are 0-based; branch tags are strings, unique per
//! component.

use deforma_core::nodal::{Branch, DualGraphCurve, NodalError};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub components: usize,
    pub points: Vec<Vec<(usize, String)>>,
}

#[derive(Debug, thiserror::Error)]
pub enum GraphError {
    #[error("invalid graph JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid graph: {0}")]
    Graph(#[from] NodalError),
}

impl GraphFile {
    pub fn from_curve(curve: &DualGraphCurve) -> Self {
        GraphFile {
            components: curve.components(),
            points: curve
                .points()
                .iter()
                .map(|p| p.iter().map(|b| (b.component, b.tag.clone())).collect())
                .collect(),
        }
    }

    pub fn into_curve(self) -> Result<DualGraphCurve, NodalError> {
        let points = self
            .points
            .into_iter()
            .map(|p| p.into_iter().map(|(c, t)| Branch::new(c, t)).collect())
            .collect();
        DualGraphCurve::new(self.components, points)
    }
}

pub fn parse_graph(text: &str) -> Result<DualGraphCurve, GraphError> {
    let file: GraphFile = serde_json::from_str(text)?;
    Ok(file.into_curve()?)
}

pub fn to_json(curve: &DualGraphCurve) -> String {
    serde_json::to_string(&GraphFile::from_curve(curve)).expect("graphs serialize")
}
