//! Schematic weaving diagrams.
//!
//! Nails sit on a horizontal line, numbered left to right. The rope enters at
//! the top left, makes one loop per letter around that letter's nail in word
//! order, and leaves at the top right. Repeated wraps on one nail are drawn
//! as growing concentric loops. Over/under crossings are not modelled.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::Error;
use crate::freegroup::{Orientation, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Svg,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "svg" | "vector" => Ok(Format::Svg),
            "text" | "txt" => Ok(Format::Text),
            _ => Err(Error::UnsupportedFormat(s.to_string())),
        }
    }
}

const SPACING: i64 = 80;
const NAIL_Y: i64 = 140;
const BASE_RADIUS: i64 = 14;
const RADIUS_STEP: i64 = 5;
const COLUMN: usize = 6;

struct Tally {
    cw: Vec<usize>,
    ccw: Vec<usize>,
}

impl Tally {
    fn of(w: &Word, n: u32) -> Self {
        let mut t = Tally {
            cw: vec![0; n as usize],
            ccw: vec![0; n as usize],
        };
        for l in w.letters() {
            let i = l.nail() as usize - 1;
            match l.orientation() {
                Orientation::Clockwise => t.cw[i] += 1,
                Orientation::Counterclockwise => t.ccw[i] += 1,
            }
        }
        t
    }

    fn legend(&self, len: usize) -> Vec<String> {
        let mut lines = vec![if len == 1 {
            "1 letter".to_string()
        } else {
            format!("{len} letters")
        }];
        for (i, (cw, ccw)) in self.cw.iter().zip(&self.ccw).enumerate() {
            lines.push(format!(
                "nail {}: {} wraps ({cw} cw, {ccw} ccw)",
                i + 1,
                cw + ccw
            ));
        }
        lines
    }
}

/// Draws `w` on nails `1..=n`.
pub fn to_diagram(w: &Word, n: u32, format: Format) -> Result<String, Error> {
    let max = w.max_nail();
    if max > n {
        return Err(Error::NailOutOfRange { nail: max, n });
    }
    Ok(match format {
        Format::Svg => svg(w, n),
        Format::Text => text(w, n),
    })
}

fn arrow(o: Orientation) -> &'static str {
    match o {
        Orientation::Clockwise => "↻",
        Orientation::Counterclockwise => "↺",
    }
}

fn svg(w: &Word, n: u32) -> String {
    let tally = Tally::of(w, n);
    let legend = tally.legend(w.len());
    let width = SPACING * (n as i64 + 1);
    let deepest = tally
        .cw
        .iter()
        .zip(&tally.ccw)
        .map(|(a, b)| a + b)
        .max()
        .unwrap_or(0) as i64;
    let rope_bottom = NAIL_Y + BASE_RADIUS + RADIUS_STEP * deepest;
    let legend_top = rope_bottom + 40;
    let height = legend_top + 18 * legend.len() as i64 + 10;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"<style>.nail{{fill:#333}}.rope{{fill:none;stroke:#a0522d;stroke-width:2}}text{{font-family:monospace;font-size:12px}}</style>"#
    );
    for i in 1..=n as i64 {
        let cx = SPACING * i;
        let _ = writeln!(
            out,
            r#"<circle class="nail" cx="{cx}" cy="{NAIL_Y}" r="4"/>"#
        );
        let _ = writeln!(
            out,
            r#"<text x="{cx}" y="{}" text-anchor="middle">{i}</text>"#,
            NAIL_Y - 30
        );
    }

    if !w.is_empty() {
        let mut path = format!("M {} 20", SPACING / 2);
        let mut depth = vec![0i64; n as usize];
        for l in w.letters() {
            let i = l.nail() as usize;
            let cx = SPACING * i as i64;
            let r = BASE_RADIUS + RADIUS_STEP * depth[i - 1];
            depth[i - 1] += 1;
            // screen coordinates point down, so sweep 1 is clockwise
            let sweep = match l.orientation() {
                Orientation::Clockwise => 1,
                Orientation::Counterclockwise => 0,
            };
            let (top, bottom) = (NAIL_Y - r, NAIL_Y + r);
            let _ = write!(
                path,
                " L {cx} {top} A {r} {r} 0 1 {sweep} {cx} {bottom} A {r} {r} 0 1 {sweep} {cx} {top}"
            );
        }
        let _ = write!(path, " L {} 20", width - SPACING / 2);
        let _ = writeln!(out, r#"<path class="rope" d="{path}"/>"#);
        let sequence: Vec<String> = w
            .letters()
            .iter()
            .map(|l| format!("{l}{}", arrow(l.orientation())))
            .collect();
        let _ = writeln!(
            out,
            r#"<text x="10" y="{}">{}</text>"#,
            rope_bottom + 20,
            sequence.join(" ")
        );
    }

    for (k, line) in legend.iter().enumerate() {
        let _ = writeln!(
            out,
            r#"<text class="legend" x="10" y="{}">{line}</text>"#,
            legend_top + 18 * k as i64
        );
    }
    out.push_str("</svg>\n");
    out
}

fn text(w: &Word, n: u32) -> String {
    let tally = Tally::of(w, n);
    let index_width = w.len().max(1).to_string().len().max(3);
    let pad = " ".repeat(index_width + 2);
    let mut out = String::new();

    let mut header = pad.clone();
    let mut marks = pad.clone();
    for i in 1..=n {
        let _ = write!(header, "{:<COLUMN$}", i);
        marks.push_str(&format!("{:<COLUMN$}", "o"));
    }
    out.push_str(header.trim_end());
    out.push('\n');
    out.push_str(marks.trim_end());
    out.push('\n');

    for (k, l) in w.letters().iter().enumerate() {
        let mut row = format!("{:>index_width$}  ", k + 1);
        let column = (l.nail() as usize - 1) * COLUMN;
        row.push_str(&" ".repeat(column));
        row.push_str(match l.orientation() {
            Orientation::Clockwise => "(>)",
            Orientation::Counterclockwise => "(<)",
        });
        let grid_end = index_width + 2 + COLUMN * n as usize;
        let len = row.chars().count();
        row.push_str(&" ".repeat(grid_end.saturating_sub(len) + 2));
        let dir = match l.orientation() {
            Orientation::Clockwise => "clockwise",
            Orientation::Counterclockwise => "counterclockwise",
        };
        let _ = writeln!(row, "{l} {dir}");
        out.push_str(&row);
    }

    out.push('\n');
    for line in tally.legend(w.len()) {
        out.push_str(&line);
        out.push('\n');
    }
    out
}
