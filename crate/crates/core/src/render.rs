//! SVG pictures of the dominant alcoves of `P³`, each labelled with the
//! Young diagram of its 3-core or of that core's `t`-core.
//!
//! A dominant 3-point `p` is placed by its gaps `d1 = p2 - p1` and
//! `d2 = p3 - p2`: horizontally at `15 (d1 - d2)` and vertically at
//! `26 (d1 + d2)` pixels, so the fundamental alcove is the top triangle and
//! every alcove vertex lands on integer pixel coordinates. Alcove row `r`
//! holds the alcoves with `3r < p3 - p1 < 3r + 3`; it has `2r + 1` members.

use std::fmt::Write as _;

use serde::Serialize;

use crate::abacus::{core, core_from_s_set};
use crate::error::{Error, Result};
use crate::geometry::{check_coprime, fold_to_dominant, reflect, Hyperplane, SPoint};
use crate::partition::Partition;

const DX: i64 = 15;
const DY: i64 = 26;
const MARGIN: i64 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Label every alcove with its 3-core.
    Cores,
    /// Label every alcove with the `t`-core of its 3-core.
    Tcores,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderSpec {
    pub s: usize,
    pub t: usize,
    /// Number of alcove rows, counted from the fundamental alcove.
    pub depth: usize,
    pub mode: Mode,
}

impl RenderSpec {
    pub fn validate(&self) -> Result<()> {
        if self.s != 3 {
            return Err(Error::Unsupported(format!(
                "rendering needs s = 3 (the plane P^3), got s = {}",
                self.s
            )));
        }
        if self.depth == 0 {
            return Err(Error::Unsupported("depth must be at least 1".into()));
        }
        if self.mode == Mode::Tcores {
            check_coprime(self.s, self.t)?;
        }
        Ok(())
    }
}

/// One rendered alcove.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub row: usize,
    pub upright: bool,
    /// The dominant 3-point inside the alcove.
    pub point: SPoint,
    pub core: Partition,
    /// The partition drawn: `core` itself, or its `t`-core.
    pub label: Partition,
}

impl Cell {
    fn gaps(&self) -> (i64, i64) {
        let c = self.point.coords();
        (c[1] - c[0], c[2] - c[1])
    }
}

/// The dominant alcoves in the first `spec.depth` rows, top row first and
/// left to right within a row.
pub fn cells(spec: &RenderSpec) -> Result<Vec<Cell>> {
    spec.validate()?;
    let mut out = Vec::new();
    for row in 0..spec.depth {
        let r = row as i64;
        // (a, b) = (floor(d1/3), floor(d2/3)); upright when a + b = row
        let mut row_cells = Vec::new();
        for a in 0..=r {
            for (b, upright) in [(r - a, true), (r - a - 1, false)] {
                if b < 0 {
                    continue;
                }
                let (d1, d2) = if upright {
                    (3 * a + 1, 3 * b + 1)
                } else {
                    (3 * a + 2, 3 * b + 2)
                };
                let p1 = (3 - 2 * d1 - d2) / 3;
                let point = SPoint::new(vec![p1, p1 + d1, p1 + d1 + d2])?;
                let core3 = core_from_s_set(&point.to_sset())?;
                let label = match spec.mode {
                    Mode::Cores => core3.clone(),
                    Mode::Tcores => core(&core3, spec.t),
                };
                row_cells.push(Cell {
                    row,
                    upright,
                    point,
                    core: core3,
                    label,
                });
            }
        }
        row_cells.sort_by_key(|c| {
            let (d1, d2) = c.gaps();
            d1 - d2
        });
        out.extend(row_cells);
    }
    Ok(out)
}

/// Pixel position of a point with gaps `(d1, d2)`.
fn place(spec: &RenderSpec, d1: i64, d2: i64) -> (i64, i64) {
    (
        MARGIN + 3 * DX * spec.depth as i64 + DX * (d1 - d2),
        MARGIN + DY * (d1 + d2),
    )
}

fn triangle(spec: &RenderSpec, cell: &Cell) -> [(i64, i64); 3] {
    let (d1, d2) = cell.gaps();
    let (a, b) = (3 * (d1 / 3), 3 * (d2 / 3));
    if cell.upright {
        [
            place(spec, a, b),
            place(spec, a + 3, b),
            place(spec, a, b + 3),
        ]
    } else {
        [
            place(spec, a + 3, b + 3),
            place(spec, a, b + 3),
            place(spec, a + 3, b),
        ]
    }
}

/// Hyperplanes `H_ij^{mt}` meeting the rendered rows.
pub fn bold_hyperplanes(spec: &RenderSpec) -> Vec<Hyperplane> {
    let reach = 3 * spec.depth as i64;
    let t = spec.t as i64;
    let mut out = Vec::new();
    for (i, j) in [(1, 2), (2, 3), (1, 3)] {
        // H_13^0 only meets the chamber at the origin
        let mut k = i64::from(i == 1 && j == 3);
        while 3 * k * t < reach {
            out.push(Hyperplane { i, j, k: k * t });
            k += 1;
        }
    }
    out
}

/// Rendered alcoves whose mirror image in a bold hyperplane is rendered
/// with a different label. Empty in tcores mode, since reflections in the
/// `H_ij^{mt}` keep the `t`-core.
pub fn symmetry_violations(spec: &RenderSpec, cells: &[Cell]) -> Result<Vec<(SPoint, Hyperplane)>> {
    let by_point: std::collections::BTreeMap<&SPoint, &Partition> =
        cells.iter().map(|c| (&c.point, &c.label)).collect();
    let mut bad = Vec::new();
    for c in cells {
        for h in bold_hyperplanes(spec) {
            let image = fold_to_dominant(&reflect(&c.point, &h)?);
            if let Some(&other) = by_point.get(&image) {
                if *other != c.label {
                    bad.push((c.point.clone(), h));
                }
            }
        }
    }
    Ok(bad)
}

fn box_size(p: &Partition) -> f64 {
    let extent = p.part(1).max(p.len()).max(4) as f64;
    (36.0 / extent).min(9.0)
}

fn write_diagram(out: &mut String, x0: i64, y0: i64, p: &Partition) {
    let b = box_size(p);
    let (w, h) = (p.part(1) as f64 * b, p.len() as f64 * b);
    let (left, top) = (x0 as f64 - w / 2.0, y0 as f64 - h / 2.0);
    for node in p.nodes() {
        let x = left + (node.col - 1) as f64 * b;
        let y = top + (node.row - 1) as f64 * b;
        let _ = writeln!(
            out,
            r#"      <rect x="{x:.2}" y="{y:.2}" width="{b:.2}" height="{b:.2}"/>"#
        );
    }
}

/// Deterministic SVG 1.1 document for `spec`.
pub fn render_svg(spec: &RenderSpec) -> Result<String> {
    let cells = cells(spec)?;
    let depth = spec.depth as i64;
    let width = 2 * MARGIN + 6 * DX * depth;
    let height = 2 * MARGIN + 3 * DY * depth;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let title = match spec.mode {
        Mode::Cores => format!(
            "3-cores on the dominant alcoves of P^3, {} rows",
            spec.depth
        ),
        Mode::Tcores => format!(
            "{}-cores of 3-cores on the dominant alcoves of P^3, {} rows",
            spec.t, spec.depth
        ),
    };
    let _ = writeln!(out, "  <title>{title}</title>");
    out.push_str(concat!(
        "  <style>",
        ".alcove polygon{fill:none;stroke:#000;stroke-width:1}",
        ".diagram rect{fill:#fff;stroke:#000;stroke-width:0.6}",
        ".bold line{stroke:#000;stroke-width:3}",
        "</style>\n"
    ));
    for c in &cells {
        let tri = triangle(spec, c);
        let points: Vec<String> = tri.iter().map(|(x, y)| format!("{x},{y}")).collect();
        let _ = writeln!(
            out,
            r#"  <g class="alcove" data-row="{}" data-spoint="{}" data-core="{}" data-partition="{}">"#,
            c.row, c.point, c.core, c.label
        );
        let _ = writeln!(out, r#"    <polygon points="{}"/>"#, points.join(" "));
        let (d1, d2) = c.gaps();
        let (x0, y0) = place(spec, d1, d2);
        out.push_str("    <g class=\"diagram\">\n");
        write_diagram(&mut out, x0, y0, &c.label);
        out.push_str("    </g>\n  </g>\n");
    }
    if spec.mode == Mode::Tcores {
        out.push_str("  <g class=\"bold\">\n");
        let reach = 3 * depth;
        for h in bold_hyperplanes(spec) {
            let k3 = 3 * h.k;
            let (from, to) = match (h.i, h.j) {
                (1, 2) => ((k3, 0), (k3, reach - k3)),
                (2, 3) => ((0, k3), (reach - k3, k3)),
                _ => ((0, k3), (k3, 0)),
            };
            let ((x1, y1), (x2, y2)) = (place(spec, from.0, from.1), place(spec, to.0, to.1));
            let _ = writeln!(
                out,
                r#"    <line data-hyperplane="{h}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#
            );
        }
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// `(data-spoint, data-partition)` of every alcove group in a rendered
/// document, in document order.
pub fn rendered_labels(svg: &str) -> Result<Vec<(SPoint, Partition)>> {
    fn attr<'a>(line: &'a str, name: &str) -> Result<&'a str> {
        let key = format!("{name}=\"");
        let start = line
            .find(&key)
            .ok_or_else(|| Error::Parse(format!("missing {name} in {line:?}")))?
            + key.len();
        let len = line[start..]
            .find('"')
            .ok_or_else(|| Error::Parse(format!("unterminated {name}")))?;
        Ok(&line[start..start + len])
    }
    svg.lines()
        .filter(|l| l.trim_start().starts_with("<g class=\"alcove\""))
        .map(|l| {
            Ok((
                attr(l, "data-spoint")?.parse()?,
                attr(l, "data-partition")?.parse()?,
            ))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::alcove_key;

    fn spec(depth: usize, mode: Mode, t: usize) -> RenderSpec {
        RenderSpec {
            s: 3,
            t,
            depth,
            mode,
        }
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn rows_have_odd_lengths_and_points_sit_in_their_alcoves() {
        let cs = cells(&spec(6, Mode::Cores, 1)).unwrap();
        for r in 0..6 {
            let row: Vec<&Cell> = cs.iter().filter(|c| c.row == r).collect();
            assert_eq!(row.len(), 2 * r + 1);
            assert_eq!(row.iter().filter(|c| c.upright).count(), r + 1);
        }
        for c in &cs {
            assert!(c.point.is_dominant());
            let k = alcove_key(&c.point).0;
            // key order: (1,2), (1,3), (2,3)
            assert_eq!(k[1] as usize, c.row);
            assert_eq!(c.upright, k[1] == k[0] + k[2]);
        }
        let keys: std::collections::BTreeSet<_> = cs.iter().map(|c| alcove_key(&c.point)).collect();
        assert_eq!(keys.len(), cs.len());
    }

    #[test]
    fn first_rows() {
        let cs = cells(&spec(3, Mode::Cores, 1)).unwrap();
        let labels: Vec<String> = cs.iter().map(|c| c.label.to_string()).collect();
        assert_eq!(
            labels,
            ["", "2", "1", "1,1", "4,2", "3,1", "3,1,1", "2,1,1", "2,2,1,1"]
        );
        assert_eq!(cs[0].point, SPoint::new(vec![0, 1, 2]).unwrap());
        assert_eq!(cs[2].point, SPoint::new(vec![-1, 1, 3]).unwrap());
    }

    #[test]
    fn validation() {
        assert!(matches!(
            RenderSpec {
                s: 4,
                ..spec(2, Mode::Cores, 1)
            }
            .validate(),
            Err(Error::Unsupported(_))
        ));
        assert!(spec(0, Mode::Cores, 1).validate().is_err());
        assert_eq!(
            spec(2, Mode::Tcores, 6).validate(),
            Err(Error::NotCoprime { s: 3, t: 6 })
        );
        assert!(spec(2, Mode::Cores, 6).validate().is_ok());
    }

    #[test]
    fn depth_one_is_the_empty_diagram() {
        let svg = render_svg(&spec(1, Mode::Cores, 1)).unwrap();
        let labels = rendered_labels(&svg).unwrap();
        assert_eq!(
            labels,
            vec![(SPoint::new(vec![0, 1, 2]).unwrap(), part(""))]
        );
        assert!(!svg.contains("<rect"));
    }

    #[test]
    fn tcores_are_symmetric_and_cores_are_not() {
        for t in [2, 4, 5, 7] {
            let sp = spec(9, Mode::Tcores, t);
            assert!(
                symmetry_violations(&sp, &cells(&sp).unwrap())
                    .unwrap()
                    .is_empty(),
                "t={t}"
            );
        }
        let sp = RenderSpec {
            mode: Mode::Cores,
            ..spec(9, Mode::Tcores, 4)
        };
        assert!(!symmetry_violations(&sp, &cells(&sp).unwrap())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn output_is_stable() {
        let sp = spec(5, Mode::Tcores, 4);
        let a = render_svg(&sp).unwrap();
        assert_eq!(a, render_svg(&sp).unwrap());
        assert_eq!(a.matches("class=\"alcove\"").count(), 25);
        assert!(a.contains("data-hyperplane=\"H{1,3}^4\""));
        assert_eq!(rendered_labels(&a).unwrap().len(), 25);
    }
}
