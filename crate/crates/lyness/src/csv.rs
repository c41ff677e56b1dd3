//! CSV emission for orbit traces and invariant grids. Floats carry 17
//! significant digits so they read back bit-exactly.

use std::io::{self, Write};

use lyness_core::dynamics::{GGrid, OrbitTrace};

pub fn float(v: f64) -> String {
    format!("{v:.16e}")
}

/// `n,x_prev,x_curr,g`.
pub fn write_trace(out: &mut impl Write, trace: &OrbitTrace) -> io::Result<()> {
    writeln!(out, "n,x_prev,x_curr,g")?;
    for (s, g) in trace.states.iter().zip(&trace.g_values) {
        writeln!(
            out,
            "{},{},{},{}",
            s.n,
            float(s.prev),
            float(s.curr),
            float(*g)
        )?;
    }
    Ok(())
}

/// `x,y,g`.
pub fn write_grid(out: &mut impl Write, grid: &GGrid) -> io::Result<()> {
    writeln!(out, "x,y,g")?;
    for p in &grid.points {
        writeln!(out, "{},{},{}", float(p.x), float(p.y), float(p.g))?;
    }
    Ok(())
}
