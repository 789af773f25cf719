//! Band-gap diagram: one column per band on a vertical spectral axis.

use std::fmt::Write as _;

use stiffgap_core::bands::{BandInterval, GapReport};

use crate::table::fmt_num;

const HEIGHT: f64 = 720.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 80.0;
const LEFT: f64 = 90.0;
const COLUMN: f64 = 64.0;
const GLYPH: f64 = 28.0;
const MIN_GLYPH_HEIGHT: f64 = 2.0;

struct Axis {
    lo: f64,
    hi: f64,
}

impl Axis {
    fn y(&self, v: f64) -> f64 {
        TOP + (self.hi - v) / (self.hi - self.lo) * (HEIGHT - TOP - BOTTOM)
    }
}

fn px(x: f64) -> String {
    format!("{x:.2}")
}

/// Renders the diagram; bands must be in spectral order and `gaps` must be
/// the adjacent-pair reports for them.
pub fn render(bands: &[BandInterval], gaps: &[GapReport]) -> String {
    let lo = bands.iter().map(|b| b.lower).fold(f64::INFINITY, f64::min);
    let hi = bands.iter().map(|b| b.upper).fold(f64::NEG_INFINITY, f64::max);
    let margin = 0.05 * (hi - lo).max(1.0);
    let axis = Axis { lo: lo - margin, hi: hi + margin };
    let width = LEFT + COLUMN * bands.len() as f64 + 20.0;
    let x_of = |i: usize| LEFT + COLUMN * i as f64 + 0.5 * (COLUMN - GLYPH);

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = px(width),
        h = px(HEIGHT)
    );
    s.push_str(concat!(
        "<defs>\n",
        "<pattern id=\"hatch\" patternUnits=\"userSpaceOnUse\" width=\"6\" height=\"6\" patternTransform=\"rotate(45)\">",
        "<rect width=\"6\" height=\"6\" fill=\"#ffffff\"/><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#555555\" stroke-width=\"2\"/>",
        "</pattern>\n",
        "<style>.band{fill:#2b5d9c}.band.undetermined{fill:url(#hatch);stroke:#555555}.gap{fill:#f2c94c;fill-opacity:0.6}text{font-family:sans-serif;font-size:11px}</style>\n",
        "</defs>\n",
    ));
    let _ = writeln!(
        s,
        r#"<line class="axis" x1="{x}" y1="{t}" x2="{x}" y2="{b}" stroke="black"/>"#,
        x = px(LEFT - 10.0),
        t = px(TOP),
        b = px(HEIGHT - BOTTOM)
    );
    for v in [lo, hi] {
        let _ = writeln!(
            s,
            r#"<text x="{x}" y="{y}" text-anchor="end">{label}</text>"#,
            x = px(LEFT - 14.0),
            y = px(axis.y(v) + 4.0),
            label = fmt_num(v)
        );
    }

    for (i, g) in gaps.iter().enumerate().filter(|(_, g)| g.certified) {
        let x0 = x_of(i) + GLYPH + 2.0;
        let x1 = x_of(i + 1) - 2.0;
        let (y0, y1) = (axis.y(g.gap_upper), axis.y(g.gap_lower));
        let _ = writeln!(
            s,
            r#"<rect class="gap" x="{x}" y="{y}" width="{w}" height="{h}"><title>gap {a} | {b}</title></rect>"#,
            x = px(x0),
            y = px(y0),
            w = px(x1 - x0),
            h = px((y1 - y0).max(MIN_GLYPH_HEIGHT)),
            a = g.below,
            b = g.above
        );
    }

    for (i, b) in bands.iter().enumerate() {
        let (mut y0, mut y1) = (axis.y(b.upper), axis.y(b.lower));
        if y1 - y0 < MIN_GLYPH_HEIGHT {
            let mid = 0.5 * (y0 + y1);
            y0 = mid - 0.5 * MIN_GLYPH_HEIGHT;
            y1 = mid + 0.5 * MIN_GLYPH_HEIGHT;
        }
        let class = if b.undetermined { "band undetermined" } else { "band" };
        let _ = writeln!(
            s,
            r#"<rect class="{class}" x="{x}" y="{y}" width="{w}" height="{h}"><title>{m}: [{lo}, {hi}]</title></rect>"#,
            x = px(x_of(i)),
            y = px(y0),
            w = px(GLYPH),
            h = px(y1 - y0),
            m = b.mode,
            lo = fmt_num(b.lower),
            hi = fmt_num(b.upper)
        );
        let _ = writeln!(
            s,
            r#"<text x="{x}" y="{y}" text-anchor="middle">{m}</text>"#,
            x = px(x_of(i) + 0.5 * GLYPH),
            y = px(HEIGHT - BOTTOM + 18.0),
            m = b.mode
        );
    }
    s.push_str("</svg>\n");
    s
}
