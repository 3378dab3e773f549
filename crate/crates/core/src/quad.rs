//! Trapezoidal quadrature on the circle `w = rho e^{I theta}` of a complex
//! slice `C_I`.
//!
//! Every integrand here has the shape `kernel(w, q) * dw_I * density(w)`, and
//! the three factors are multiplied in exactly that order. With
//! `w = rho e^{I theta}` the measure element is `dw_I = e^{I theta} rho dtheta`,
//! a quaternion in `C_I` that in general commutes with neither neighbour.
//!
//! Sums run sequentially in node order, so a given node count always gives
//! bit-identical results.

use std::f64::consts::PI;

use serde_json::{json, Value};
use thiserror::Error;

use crate::kernels::{delta_s_inv, explicit_fueter_kernel, f_j, KernelError};
use crate::quat::{FloatQuat, QuatError, UnitImaginary};
use crate::slicefn::{RightSlicePolyFn, SlicePolyFn};

pub const DEFAULT_NODES: usize = 512;
pub const DEFAULT_RADIUS: f64 = 1.0;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum QuadError {
    #[error("|q| = {norm} is not inside the contour of radius {radius}")]
    OutsideContour { norm: f64, radius: f64 },
    #[error("orders differ: f has order {left}, g has order {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("invalid contour: {0}")]
    InvalidContour(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// The circle `|w| = rho` in `C_I`, sampled at `N` equispaced angles.
#[derive(Debug, Clone, PartialEq)]
pub struct CirclePath {
    unit: UnitImaginary<f64>,
    radius: f64,
    nodes: usize,
}

/// One quadrature node with its measure element `dw_I`.
#[derive(Debug, Clone, PartialEq)]
pub struct Node {
    pub w: FloatQuat,
    pub dw: FloatQuat,
}

impl Default for CirclePath {
    fn default() -> Self {
        Self {
            unit: UnitImaginary::i(),
            radius: DEFAULT_RADIUS,
            nodes: DEFAULT_NODES,
        }
    }
}

impl CirclePath {
    pub fn new(unit: UnitImaginary<f64>, radius: f64, nodes: usize) -> Result<Self, QuadError> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(QuadError::InvalidContour(format!("radius must be positive, found {radius}")));
        }
        if !nodes.is_power_of_two() {
            return Err(QuadError::InvalidContour(format!(
                "node count must be a power of two, found {nodes}"
            )));
        }
        Ok(Self { unit, radius, nodes })
    }

    pub fn with_unit(unit: UnitImaginary<f64>) -> Self {
        Self {
            unit,
            ..Self::default()
        }
    }

    pub fn unit(&self) -> &UnitImaginary<f64> {
        &self.unit
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    /// Same circle, different node count.
    pub fn with_nodes(&self, nodes: usize) -> Result<Self, QuadError> {
        Self::new(self.unit.clone(), self.radius, nodes)
    }

    /// Same radius and node count on another slice.
    pub fn on_unit(&self, unit: UnitImaginary<f64>) -> Self {
        Self {
            unit,
            ..self.clone()
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        let dtheta = 2.0 * PI / self.nodes as f64;
        (0..self.nodes).map(move |m| {
            let theta = dtheta * m as f64;
            let (sin, cos) = theta.sin_cos();
            let e = self.unit.point(&cos, &sin);
            Node {
                w: e.scale(&self.radius),
                dw: e.scale(&(self.radius * dtheta)),
            }
        })
    }

    fn check_inside(&self, q: &FloatQuat) -> Result<(), QuadError> {
        let norm = q.norm();
        if norm.partial_cmp(&self.radius) != Some(std::cmp::Ordering::Less) {
            return Err(QuadError::OutsideContour {
                norm,
                radius: self.radius,
            });
        }
        Ok(())
    }

    /// `{"unit": [x, y, z], "radius": rho, "nodes": N}`.
    pub fn to_json(&self) -> Value {
        let u = self.unit.as_quat();
        json!({"unit": [u.x, u.y, u.z], "radius": self.radius, "nodes": self.nodes})
    }

    /// Missing fields take their defaults.
    pub fn from_json(v: &Value) -> Result<Self, QuadError> {
        let bad = |msg: &str| QuadError::InvalidContour(msg.to_string());
        let obj = v.as_object().ok_or_else(|| bad("contour must be a JSON object"))?;
        let unit = match obj.get("unit") {
            None => UnitImaginary::i(),
            Some(u) => {
                let xs = u
                    .as_array()
                    .filter(|a| a.len() == 3)
                    .and_then(|a| a.iter().map(Value::as_f64).collect::<Option<Vec<_>>>())
                    .ok_or_else(|| bad("\"unit\" must be an array of three numbers"))?;
                UnitImaginary::from_direction(xs[0], xs[1], xs[2])
                    .map_err(|e: QuatError| QuadError::InvalidContour(e.to_string()))?
            }
        };
        let radius = match obj.get("radius") {
            None => DEFAULT_RADIUS,
            Some(r) => r.as_f64().ok_or_else(|| bad("\"radius\" must be a number"))?,
        };
        let nodes = match obj.get("nodes") {
            None => DEFAULT_NODES,
            Some(n) => n
                .as_u64()
                .ok_or_else(|| bad("\"nodes\" must be a positive integer"))? as usize,
        };
        Self::new(unit, radius, nodes)
    }
}

/// Reconstructs `f(q)` from the slice Cauchy-Riemann derivatives of `f` on the
/// contour, weighted by the poly-Cauchy kernels:
/// `(1/2pi) sum_m sum_j (-2)^j F_j(w, q) dw_I dbar_I^j f(w)`.
pub fn poly_cauchy_eval(f: &SlicePolyFn, q: &FloatQuat, path: &CirclePath) -> Result<FloatQuat, QuadError> {
    path.check_inside(q)?;
    let n = f.order();
    let mut acc = FloatQuat::zero();
    for node in path.nodes() {
        let mut weight = 1.0;
        for j in 0..n {
            let kernel = f_j(&node.w, q, j)?.scale(&weight);
            acc += &(kernel * &node.dw * f.cr_derivative_at(j, &node.w));
            weight *= -2.0;
        }
    }
    Ok(acc.scale(&(0.5 / PI)))
}

/// `tau_n f(q)` as `(2^(n-1) / 2pi) sum_m Laplacian S^{-1}(w, q) dw_I dbar_I^(n-1) f(w)`.
pub fn fueter_integral(f: &SlicePolyFn, q: &FloatQuat, path: &CirclePath) -> Result<FloatQuat, QuadError> {
    path.check_inside(q)?;
    let n = f.order();
    let mut acc = FloatQuat::zero();
    for node in path.nodes() {
        let density = f.cr_derivative_at(n - 1, &node.w);
        acc += &(delta_s_inv(&node.w, q)? * &node.dw * density);
    }
    Ok(acc.scale(&(2f64.powi(n as i32 - 1) / (2.0 * PI))))
}

/// Same value as [`fueter_integral`] through
/// `(2^n / pi) sum_m (qbar - w)(w^2 - 2 Re(q) w + |q|^2)^{-2} dw_I dbar_I^(n-1) f(w)`.
pub fn fueter_integral_explicit(
    f: &SlicePolyFn,
    q: &FloatQuat,
    path: &CirclePath,
) -> Result<FloatQuat, QuadError> {
    path.check_inside(q)?;
    let n = f.order();
    let mut acc = FloatQuat::zero();
    for node in path.nodes() {
        let density = f.cr_derivative_at(n - 1, &node.w);
        acc += &(explicit_fueter_kernel(&node.w, q)? * &node.dw * density);
    }
    Ok(acc.scale(&(2f64.powi(n as i32) / PI)))
}

/// `sum_m sum_j (-1)^j [(g) dbar_I^(n-1-j)](w) dw_I [dbar_I^j f](w)` for a left
/// function `f` and a right function `g` of the same order. A right function
/// of lower order is padded with zero components.
pub fn cauchy_theorem_residual(
    f: &SlicePolyFn,
    g: &RightSlicePolyFn,
    path: &CirclePath,
) -> Result<FloatQuat, QuadError> {
    let n = f.order();
    if g.order() > n {
        return Err(QuadError::OrderMismatch {
            left: n,
            right: g.order(),
        });
    }
    let g = g.padded(n);
    let mut acc = FloatQuat::zero();
    for node in path.nodes() {
        for j in 0..n {
            let left = g.right_cr_derivative_at(n - 1 - j, &node.w);
            let term = left * &node.dw * f.cr_derivative_at(j, &node.w);
            if j % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
    }
    Ok(acc)
}

/// Which integral representation to compare across slices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegralKind {
    Cauchy,
    Fueter,
}

impl IntegralKind {
    pub fn eval(self, f: &SlicePolyFn, q: &FloatQuat, path: &CirclePath) -> Result<FloatQuat, QuadError> {
        match self {
            Self::Cauchy => poly_cauchy_eval(f, q, path),
            Self::Fueter => fueter_integral(f, q, path),
        }
    }
}

/// `|integral over C_{I1} - integral over C_{I2}|`, both on circles shaped like `path`.
pub fn unit_independence_check(
    kind: IntegralKind,
    f: &SlicePolyFn,
    q: &FloatQuat,
    first: &UnitImaginary<f64>,
    second: &UnitImaginary<f64>,
    path: &CirclePath,
) -> Result<f64, QuadError> {
    let a = kind.eval(f, q, &path.on_unit(first.clone()))?;
    let b = kind.eval(f, q, &path.on_unit(second.clone()))?;
    Ok(a.dist(&b))
}
