//! Colour-class bound versus clique bound for chordal graphs.

use crate::{int, ratio, Rational};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Best {
    Left,
    Right,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableCell {
    pub k: usize,
    pub omega: usize,
    /// `1 - (2/ω)(k-1)/k`.
    #[serde(serialize_with = "crate::ser::rational")]
    pub left: Rational,
    /// `ω/(ω+k-1)`.
    #[serde(serialize_with = "crate::ser::rational")]
    pub right: Rational,
    pub best: Best,
}

pub fn colour_class_coefficient(k: usize, chi: usize) -> Rational {
    int(1) - ratio(2 * (k as i64 - 1), (chi * k) as i64)
}

pub fn clique_coefficient(k: usize, omega: usize) -> Rational {
    ratio(omega as i64, (omega + k - 1) as i64)
}

/// One row per `k`, cells ordered by `omega`.
pub fn table_chordal(ks: &[usize], omegas: &[usize]) -> Vec<Vec<TableCell>> {
    ks.iter()
        .map(|&k| {
            omegas
                .iter()
                .map(|&omega| {
                    let left = colour_class_coefficient(k, omega);
                    let right = clique_coefficient(k, omega);
                    let best = match left.cmp(&right) {
                        std::cmp::Ordering::Less => Best::Left,
                        std::cmp::Ordering::Greater => Best::Right,
                        std::cmp::Ordering::Equal => Best::Both,
                    };
                    TableCell { k, omega, left, right, best }
                })
                .collect()
        })
        .collect()
}

/// Plain-text rendering; the smaller value of each pair is starred.
pub fn render_table(rows: &[Vec<TableCell>]) -> String {
    let mark = |r: &Rational, best: bool| if best { format!("*{r}") } else { r.to_string() };
    let mut out = String::new();
    for row in rows {
        let Some(first) = row.first() else { continue };
        let mut cols = vec![format!("k={}", first.k)];
        cols.extend(row.iter().map(|c| mark(&c.left, c.best != Best::Right)));
        cols.extend(row.iter().map(|c| mark(&c.right, c.best != Best::Left)));
        out.push_str(&cols.join(" "));
        out.push('\n');
    }
    out
}
