//! Point grids for drawing value semigroups.

use serde::{Deserialize, Serialize};

use super::{BiAmalgSpec, Mode};
use crate::error::{Error, Result};
use crate::goodsgp::GoodSemigroup;

/// How values are placed on the axes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "scale")]
pub enum Convention {
    /// Orders in each branch's own normalization.
    Intrinsic,
    /// Coordinate `i` multiplied by `scale[i]`.
    Scaled([i64; 2]),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MarkerClass {
    /// Value of a pure pair `(f(a), g(a))`; drawn filled.
    Diagonal,
    /// Anything else; drawn as a circle.
    General,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PlotPoint {
    pub x: i64,
    pub y: i64,
    pub class: MarkerClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlotGrid {
    /// Upper corner in displayed coordinates; the lower corner is the origin.
    pub window: [i64; 2],
    pub scale: [i64; 2],
    /// Sorted by `(x, y)`.
    pub points: Vec<PlotPoint>,
}

impl PlotGrid {
    pub fn coordinates(&self) -> Vec<[i64; 2]> {
        self.points.iter().map(|p| [p.x, p.y]).collect()
    }

    pub fn of_class(&self, class: MarkerClass) -> Vec<[i64; 2]> {
        self.points.iter().filter(|p| p.class == class).map(|p| [p.x, p.y]).collect()
    }
}

/// The axis scaling that puts an amalgamation's first branch on the same
/// footing as `f(A)`: `(deg f, 1)`; `(1, 1)` for the other modes.
pub fn default_scale(spec: &BiAmalgSpec) -> [i64; 2] {
    match spec.mode() {
        Mode::Amalg => [spec.sides()[1].degree(), 1],
        _ => [1, 1],
    }
}

/// Members of `semigroup` that land in `[0, window]` after scaling, classed
/// by whether they are values of pure pairs.
pub fn plot_data(
    spec: &BiAmalgSpec,
    semigroup: &GoodSemigroup,
    window: [i64; 2],
    convention: Convention,
) -> Result<PlotGrid> {
    let scale = match convention {
        Convention::Intrinsic => [1, 1],
        Convention::Scaled(s) => s,
    };
    if window.iter().any(|&w| w < 0) || scale.iter().any(|&s| s < 1) {
        return Err(Error::EmptyWindow);
    }
    let sa = spec.domain();
    let [d1, d2] = [spec.sides()[0].degree(), spec.sides()[1].degree()];
    let diagonal = |a: i64, b: i64| a % d1 == 0 && sa.contains(a / d1) && b == a / d1 * d2;

    let mut points = Vec::new();
    for a in 0..=window[0] / scale[0] {
        for b in 0..=window[1] / scale[1] {
            if !semigroup.member(&[a, b])? {
                continue;
            }
            let class = if diagonal(a, b) { MarkerClass::Diagonal } else { MarkerClass::General };
            points.push(PlotPoint { x: a * scale[0], y: b * scale[1], class });
        }
    }
    Ok(PlotGrid { window, scale, points })
}
