//! Output file stems. Each encodes the object, the grids and the order.

use trigspline::{GridId, Parity, SplineConfig};

pub fn spline(cfg: &SplineConfig) -> String {
    format!(
        "st_i1-{}_i2-{}_r-{}",
        cfg.stitching, cfg.interpolation, cfg.order
    )
}

pub fn polynomial(i1: GridId, i2: GridId) -> String {
    format!("tn_i1-{i1}_i2-{i2}")
}

pub fn kernel_first(cfg: &SplineConfig) -> String {
    let name = match cfg.parity() {
        Parity::Even => "kr0",
        Parity::Odd => "kr1",
    };
    format!(
        "{name}_i1-{}_i2-{}_r-{}",
        cfg.stitching, cfg.interpolation, cfg.order
    )
}

pub fn kernel_second(i1: GridId, i2: GridId, parity: Parity) -> String {
    let name = match parity {
        Parity::Even => "kr0star",
        Parity::Odd => "kr1star",
    };
    format!("{name}_i1-{i1}_i2-{i2}")
}

pub fn bspline_first(order: u32) -> String {
    format!("br_r-{order}")
}

pub fn bspline_second(i1: GridId, i2: GridId, order: u32) -> String {
    format!("brstar_i1-{i1}_i2-{i2}_r-{order}")
}
