//! JSON form of a solution.

use serde::{Deserialize, Serialize};

use boxcover::{AxisBox64, ProblemSpec, Shape, Solution64};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoxDoc {
    pub xmin: f64,
    pub ymin: f64,
    pub xmax: f64,
    pub ymax: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionDoc {
    pub p: usize,
    pub k: usize,
    pub shape: String,
    pub objective: f64,
    pub covered: usize,
    pub boxes: Vec<BoxDoc>,
    pub outliers: Vec<usize>,
}

impl SolutionDoc {
    pub fn new(spec: &ProblemSpec, sol: &Solution64) -> Self {
        SolutionDoc {
            p: spec.p,
            k: spec.k,
            shape: spec.shape.to_string(),
            objective: sol.objective,
            covered: sol.covered,
            boxes: sol
                .boxes
                .iter()
                .map(|b| BoxDoc {
                    xmin: b.xmin,
                    ymin: b.ymin,
                    xmax: b.xmax,
                    ymax: b.ymax,
                })
                .collect(),
            outliers: sol.outliers.clone(),
        }
    }

    pub fn shape(&self) -> Option<Shape> {
        match self.shape.as_str() {
            "square" => Some(Shape::Square),
            "rect" => Some(Shape::Rect),
            _ => None,
        }
    }

    /// Boxes with inverted corners are rejected.
    pub fn axis_boxes(&self) -> Option<Vec<AxisBox64>> {
        let shape = self.shape()?;
        self.boxes
            .iter()
            .map(|b| {
                (b.xmin <= b.xmax && b.ymin <= b.ymax)
                    .then(|| AxisBox64::new(b.xmin, b.ymin, b.xmax, b.ymax, shape))
            })
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "p = {}, k = {}, shape = {}\nobjective {:?}\ncovered {}\n",
            self.p, self.k, self.shape, self.objective, self.covered
        );
        for b in &self.boxes {
            out.push_str(&format!(
                "box [{:?}, {:?}] x [{:?}, {:?}]\n",
                b.xmin, b.xmax, b.ymin, b.ymax
            ));
        }
        let ids: Vec<String> = self.outliers.iter().map(usize::to_string).collect();
        out.push_str(&format!("outliers {}\n", ids.join(" ")));
        out
    }
}
