//! Case tables as printed in the source, transcribed verbatim (including
//! any misprints) so that reproduction checks compare against the printed
//! numbers rather than recomputed ones.

use crate::invariants::FiberTypeVector;

/// Source label for enumerated vectors missing from a tabulated genus.
pub const NOT_LISTED: &str = "not listed in source tables";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub label: &'static str,
    pub genus: i64,
    /// `(n, s_1, ..., s_⌊g/2⌋)` as printed.
    pub counts: &'static [i64],
    pub e: i64,
    pub sigma: i64,
    pub c1_sq: i64,
    /// Printed only for some tables.
    pub chi_h: Option<i64>,
}

const fn row(
    label: &'static str,
    genus: i64,
    counts: &'static [i64],
    e: i64,
    sigma: i64,
    c1_sq: i64,
    chi_h: Option<i64>,
) -> TableRow {
    TableRow {
        label,
        genus,
        counts,
        e,
        sigma,
        c1_sq,
        chi_h,
    }
}

pub static ROWS: [TableRow; 72] = [
    row("(a1)", 4, &[6, 1, 0], -5, -3, -19, None),
    row("(a2)", 4, &[6, 4, 0], -2, -2, -10, None),
    row("(a3)", 4, &[6, 0, 3], -3, -1, -9, None),
    row("(a4)", 4, &[8, 2, 1], -1, -3, -11, None),
    row("(b1)", 7, &[12, 0, 0, 2], -10, -2, -26, Some(-3)),
    row("(b2)", 7, &[12, 2, 0, 1], -9, -3, -27, Some(-3)),
    row("(b3)", 7, &[12, 4, 0, 0], -8, -4, -28, Some(-3)),
    row("(b4)", 7, &[12, 1, 0, 4], -7, 3, -5, Some(-1)),
    row("(b5)", 7, &[12, 0, 3, 2], -7, 3, -5, Some(-1)),
    row("(b6)", 7, &[12, 3, 0, 3], -6, 2, -12, Some(-1)),
    row("(b7)", 7, &[12, 2, 3, 1], -5, 1, -7, Some(-1)),
    row("(b8)", 7, &[12, 0, 0, 7], -5, 9, -5, Some(1)),
    row("(b9)", 7, &[12, 5, 0, 2], -5, 1, -7, Some(-1)),
    row("(b10)", 7, &[12, 4, 3, 0], -5, 1, -7, Some(-1)),
    row("(b11)", 7, &[16, 0, 2, 1], -5, -3, -19, Some(-2)),
    row("(c1)", 5, &[8, 0, 2], -6, -2, -18, Some(-2)),
    row("(c2)", 5, &[8, 3, 0], -5, -3, -19, Some(-2)),
    row("(c3)", 5, &[8, 1, 5], -2, 2, 2, Some(0)),
    row("(d1)", 6, &[10, 0, 3, 0], -7, -1, -17, None),
    row("(d2)", 6, &[10, 3, 0, 1], -6, -2, -18, None),
    row("(d3)", 6, &[10, 2, 0, 3], -5, 1, -7, None),
    row("(d4)", 6, &[10, 1, 4, 0], -5, 1, -7, None),
    row("(d5)", 6, &[12, 0, 1, 0], -7, -5, -29, None),
    row("(d6)", 6, &[12, 1, 2, 0], -5, -3, -19, None),
    row("(d7)", 6, &[14, 1, 0, 0], -5, -7, -31, None),
    row("(e1)", 8, &[14, 1, 0, 0, 1], -12, -4, -36, None),
    row("(e2)", 8, &[14, 0, 2, 0, 1], -11, -1, -25, None),
    row("(e3)", 8, &[14, 0, 1, 3, 0], -10, 2, -14, None),
    row("(e4)", 8, &[16, 1, 1, 0, 0], -10, -6, -38, None),
    row("(e5)", 8, &[14, 0, 1, 2, 2], -9, 5, -3, None),
    row("(f1)", 9, &[16, 0, 0, 0, 2], -14, -2, -34, None),
    row("(f2)", 9, &[16, 1, 1, 1, 0], -13, -3, -35, None),
    row("(f3)", 9, &[16, 0, 0, 1, 3], -12, 4, -12, None),
    row("(f4)", 9, &[16, 5, 0, 0, 0], -11, -5, -37, None),
    row("(f5)", 9, &[16, 1, 1, 2, 1], -11, 3, -13, None),
    row("(f6)", 9, &[16, 0, 3, 2, 0], -11, 3, -13, None),
    row("(f7)", 9, &[16, 3, 1, 0, 2], -10, 2, -14, None),
    row("(f8)", 9, &[16, 3, 0, 3, 0], -10, 2, -14, None),
    row("(f9)", 9, &[16, 2, 3, 0, 1], -10, 2, -14, None),
    row("(f10)", 9, &[16, 1, 5, 0, 0], -10, 2, -14, None),
    row("(f11)", 9, &[16, 0, 0, 2, 4], -10, 10, 10, None),
    row("(f12)", 9, &[16, 5, 0, 1, 1], -9, 1, -15, None),
    row("(f13)", 9, &[16, 4, 2, 1, 0], -9, 1, -15, None),
    row("(f14)", 9, &[16, 2, 0, 0, 5], -9, 9, 9, None),
    row("(f15)", 9, &[16, 1, 2, 0, 4], -9, 9, 9, None),
    row("(f16)", 9, &[16, 1, 1, 3, 2], -9, 9, 9, None),
    row("(f17)", 9, &[16, 1, 0, 6, 0], -9, 9, 9, None),
    row("(f18)", 9, &[16, 0, 4, 0, 3], -9, 9, 9, None),
    row("(f19)", 9, &[16, 0, 3, 3, 1], -9, 9, 9, None),
    row("(f20)", 9, &[20, 0, 1, 2, 0], -9, -3, -27, None),
    row("(g1)", 10, &[16, 0, 1, 0, 1, 1], -17, 1, -31, None),
    row("(g2)", 10, &[16, 1, 2, 0, 1, 0], -16, 0, -32, None),
    row("(g3)", 10, &[16, 0, 1, 1, 1, 1], -16, 4, -20, None),
    row("(g4)", 10, &[16, 1, 2, 1, 1, 0], -15, 3, -21, None),
    row("(g5)", 10, &[16, 1, 0, 0, 2, 2], -15, 7, -9, None),
    row("(g6)", 10, &[16, 0, 2, 0, 0, 3], -15, 7, -9, None),
    row("(g7)", 10, &[16, 0, 1, 2, 1, 1], -15, 7, -9, None),
    row("(g8)", 10, &[16, 4, 0, 0, 0, 2], -14, 2, -22, None),
    row("(g9)", 10, &[16, 2, 1, 0, 2, 1], -14, 6, -10, None),
    row("(g10)", 10, &[16, 1, 3, 0, 0, 2], -14, 6, -10, None),
    row("(g11)", 10, &[16, 1, 2, 2, 1, 0], -14, 6, -10, None),
    row("(g12)", 10, &[16, 1, 0, 1, 2, 2], -14, 10, 2, None),
    row("(g13)", 10, &[16, 0, 2, 1, 0, 3], -14, 10, 2, None),
    row("(g14)", 10, &[16, 0, 2, 0, 4, 0], -14, 10, 2, None),
    row("(g15)", 10, &[16, 0, 0, 0, 1, 5], -14, 14, 14, None),
    row("(g16)", 10, &[18, 2, 0, 0, 0, 0], -16, -8, -56, None),
    row("(g17)", 10, &[18, 2, 0, 1, 0, 0], -15, -5, -45, None),
    row("(g18)", 10, &[18, 2, 0, 2, 0, 0], -14, -2, -34, None),
    row("(g19)", 10, &[18, 1, 0, 0, 3, 0], -14, 2, -22, None),
    row("(g20)", 10, &[18, 0, 2, 0, 0, 1], -14, 2, -22, None),
    row("(g21)", 10, &[20, 1, 0, 0, 0, 1], -14, -6, -46, None),
    row("(g22)", 10, &[18, 0, 0, 0, 2, 3], -13, 9, 1, None),
];

/// `(genus, budget)` pairs at which each table was produced.
pub const TABULATED: [(i64, i64); 7] = [
    (4, 12),
    (5, 15),
    (6, 16),
    (7, 20),
    (8, 20),
    (9, 24),
    (10, 24),
];

pub fn rows_for(genus: i64) -> impl Iterator<Item = &'static TableRow> {
    ROWS.iter().filter(move |r| r.genus == genus)
}

pub fn is_tabulated(genus: i64) -> bool {
    TABULATED.iter().any(|&(g, _)| g == genus)
}

pub fn find(v: &FiberTypeVector) -> Option<&'static TableRow> {
    rows_for(v.genus()).find(|r| r.counts[0] == v.n() && &r.counts[1..] == v.s())
}

/// Row label, [`NOT_LISTED`] for an untabulated vector of a tabulated genus,
/// `None` otherwise.
pub fn label_for(v: &FiberTypeVector) -> Option<&'static str> {
    match find(v) {
        Some(r) => Some(r.label),
        None if is_tabulated(v.genus()) => Some(NOT_LISTED),
        None => None,
    }
}
