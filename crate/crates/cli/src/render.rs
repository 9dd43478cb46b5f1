//! Plain-text rendering.

use num_complex::Complex64;
use tvsat::engine::{KnotExpr, TVModule};
use tvsat::linalg::CharPoly;
use tvsat::FieldContext;

use crate::roots::format_complex;

pub fn module(ctx: &FieldContext, k: &KnotExpr, m: &TVModule) -> String {
    let mat = m.matrix();
    let n = mat.rows();
    let mut out = format!("Z_{}({k}, {}): dimension {n}", ctx.p(), m.color());
    if !m.note().is_empty() {
        out.push_str(&format!(" [{}]", m.note()));
    }
    let labels: Vec<String> = match mat.row_labels() {
        Some(l) => l.to_vec(),
        None => (0..n).map(|i| format!("e{i}")).collect(),
    };
    let width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    for (i, label) in labels.iter().enumerate() {
        let row: Vec<String> = (0..n).map(|j| mat.get(i, j).to_string()).collect();
        out.push_str(&format!("\n  {label:>width$} | {}", row.join(", ")));
    }
    out
}

pub fn charpoly(cp: &CharPoly, approx: Option<&(usize, Vec<Complex64>)>) -> String {
    let mut out = cp.to_string();
    if let Some((digits, roots)) = approx {
        out.push_str(&format!("\napproximate roots ({digits} digits, numerical, not exact):"));
        for z in roots {
            out.push_str(&format!("\n  {}", format_complex(*z, *digits)));
        }
    }
    out
}
