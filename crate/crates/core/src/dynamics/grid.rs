use alloc::vec::Vec;

use crate::model::invariant;
use crate::{Error, Result};

/// `[xmin, xmax] x [ymin, ymax]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridPoint {
    pub x: f64,
    pub y: f64,
    pub g: f64,
}

/// Row-major samples, `y` varying fastest.
#[derive(Clone, Debug, PartialEq)]
pub struct GGrid {
    pub resolution: usize,
    pub points: Vec<GridPoint>,
}

impl GGrid {
    pub fn at(&self, i: usize, j: usize) -> &GridPoint {
        &self.points[i * self.resolution + j]
    }

    /// First point attaining the smallest `g`.
    pub fn argmin(&self) -> &GridPoint {
        self.points.iter().fold(
            &self.points[0],
            |best, p| if p.g < best.g { p } else { best },
        )
    }
}

/// The Lyness invariant sampled on `resolution x resolution` evenly spaced
/// points including the window corners.
pub fn g_grid(alpha_tilde: f64, window: Window, resolution: usize) -> Result<GGrid> {
    if alpha_tilde.is_nan() || alpha_tilde <= 0.0 {
        return Err(Error::domain("alpha_tilde must be positive"));
    }
    if resolution < 2 {
        return Err(Error::domain("resolution must be at least 2"));
    }
    let Window {
        xmin,
        xmax,
        ymin,
        ymax,
    } = window;
    if !(xmin > 0.0 && ymin > 0.0) {
        return Err(Error::domain(
            "window must lie in the open positive quadrant",
        ));
    }
    if !(xmin < xmax && ymin < ymax) || !xmax.is_finite() || !ymax.is_finite() {
        return Err(Error::domain("window bounds must be finite and increasing"));
    }
    let last = (resolution - 1) as f64;
    let coord = |lo: f64, hi: f64, i: usize| {
        if i == resolution - 1 {
            hi
        } else {
            lo + (hi - lo) * i as f64 / last
        }
    };
    let mut points = Vec::with_capacity(resolution * resolution);
    for i in 0..resolution {
        let x = coord(xmin, xmax, i);
        for j in 0..resolution {
            let y = coord(ymin, ymax, j);
            // ordered arguments keep the rounding symmetric in x and y
            let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
            points.push(GridPoint {
                x,
                y,
                g: invariant(&lo, &hi, &alpha_tilde),
            });
        }
    }
    Ok(GGrid { resolution, points })
}
