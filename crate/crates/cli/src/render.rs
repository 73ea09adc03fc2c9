//! ASCII and SVG drawings of a [`PlotGrid`].
//!
//! Pure-pair values are drawn filled (`*` in ASCII), all other values as
//! circles (`o`). Axis ticks sit at the coordinates of the filled points.

use std::collections::BTreeSet;
use std::fmt::Write;

use bicurve::constructions::{MarkerClass, PlotGrid};

fn ticks(grid: &PlotGrid) -> [Vec<i64>; 2] {
    let diagonal = grid.of_class(MarkerClass::Diagonal);
    let xs: BTreeSet<i64> = diagonal.iter().map(|p| p[0]).collect();
    let ys: BTreeSet<i64> = diagonal.iter().map(|p| p[1]).collect();
    [xs.into_iter().collect(), ys.into_iter().collect()]
}

/// One row per `y` from the top, one column per `x`.
pub fn ascii(grid: &PlotGrid) -> String {
    let [w, h] = grid.window;
    let mut cells = vec![vec!['.'; (w + 1) as usize]; (h + 1) as usize];
    for p in &grid.points {
        cells[p.y as usize][p.x as usize] = match p.class {
            MarkerClass::Diagonal => '*',
            MarkerClass::General => 'o',
        };
    }
    let mut out = String::new();
    for y in (0..=h).rev() {
        let row: String = cells[y as usize].iter().flat_map(|&c| [c, ' ']).collect();
        writeln!(out, "{y:>4} | {}", row.trim_end()).unwrap();
    }
    let [xt, yt] = ticks(grid);
    let join = |v: &[i64]| v.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ");
    writeln!(out, "     +-{}", "--".repeat(w as usize)).unwrap();
    writeln!(out, "x ticks: {}", join(&xt)).unwrap();
    writeln!(out, "y ticks: {}", join(&yt)).unwrap();
    out
}

const UNIT: i64 = 12;
const MARGIN: i64 = 36;

/// A standalone SVG document; every marker carries `data-x`/`data-y`.
pub fn svg(grid: &PlotGrid) -> String {
    let [w, h] = grid.window;
    let width = 2 * MARGIN + UNIT * w;
    let height = 2 * MARGIN + UNIT * h;
    let px = |x: i64| MARGIN + UNIT * x;
    let py = |y: i64| height - MARGIN - UNIT * y;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    writeln!(
        out,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        px(0) - 6,
        py(0),
        px(w) + 6,
        py(0)
    )
    .unwrap();
    writeln!(
        out,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        px(0),
        py(0) + 6,
        px(0),
        py(h) - 6
    )
    .unwrap();
    let [xt, yt] = ticks(grid);
    for x in xt {
        writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="10" text-anchor="middle">{x}</text>"#,
            px(x),
            py(0) + 16
        )
        .unwrap();
    }
    for y in yt {
        writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="10" text-anchor="end">{y}</text>"#,
            px(0) - 8,
            py(y) + 3
        )
        .unwrap();
    }
    for p in &grid.points {
        let (cx, cy) = (px(p.x), py(p.y));
        match p.class {
            MarkerClass::Diagonal => writeln!(
                out,
                r#"<circle class="diagonal" data-x="{}" data-y="{}" cx="{cx}" cy="{cy}" r="3" fill="black"/>"#,
                p.x, p.y
            ),
            MarkerClass::General => writeln!(
                out,
                r#"<circle class="general" data-x="{}" data-y="{}" cx="{cx}" cy="{cy}" r="4" fill="none" stroke="black"/>"#,
                p.x, p.y
            ),
        }
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// Reads the markers back from [`ascii`] output.
pub fn parse_ascii(text: &str) -> BTreeSet<(i64, i64, char)> {
    let mut out = BTreeSet::new();
    for line in text.lines() {
        let Some((label, row)) = line.split_once(" | ") else { continue };
        let Ok(y) = label.trim().parse::<i64>() else { continue };
        for (x, c) in row.chars().step_by(2).enumerate() {
            if c == '*' || c == 'o' {
                out.insert((x as i64, y, c));
            }
        }
    }
    out
}

/// Reads the markers back from [`svg`] output.
pub fn parse_svg(text: &str) -> BTreeSet<(i64, i64, char)> {
    let attr = |line: &str, name: &str| -> Option<String> {
        let start = line.find(&format!("{name}=\""))? + name.len() + 2;
        let end = line[start..].find('"')? + start;
        Some(line[start..end].to_string())
    };
    text.lines()
        .filter(|l| l.starts_with("<circle"))
        .filter_map(|l| {
            let x = attr(l, "data-x")?.parse().ok()?;
            let y = attr(l, "data-y")?.parse().ok()?;
            let c = if attr(l, "class")? == "diagonal" { '*' } else { 'o' };
            Some((x, y, c))
        })
        .collect()
}
