use std::fmt::Write as _;
use std::io::Write;

use anyhow::Result;
use subord_core::BoundaryCurve;

/// Write both curves as `curve,theta,re,im` rows, dominant first.
pub fn write_csv<W: Write>(out: W, q: &BoundaryCurve, target: &BoundaryCurve) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["curve", "theta", "re", "im"])?;
    for (name, curve) in [("q", q), ("target", target)] {
        for (t, p) in curve.params.iter().zip(&curve.points) {
            w.write_record([name.to_string(), t.to_string(), p.re.to_string(), p.im.to_string()])?;
        }
    }
    w.flush()?;
    Ok(())
}

const SIZE: f64 = 640.0;
const PAD: f64 = 0.05;

/// Minimal static SVG: the two curves as closed polylines plus the axes.
pub fn render_svg(q: &BoundaryCurve, target: &BoundaryCurve, title: &str) -> String {
    let all = q.points.iter().chain(&target.points);
    let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for p in all {
        x0 = x0.min(p.re);
        x1 = x1.max(p.re);
        y0 = y0.min(p.im);
        y1 = y1.max(p.im);
    }
    let span = (x1 - x0).max(y1 - y0) * (1.0 + 2.0 * PAD);
    let cx = 0.5 * (x0 + x1);
    let cy = 0.5 * (y0 + y1);
    let sx = |x: f64| (x - cx) / span * SIZE + SIZE / 2.0;
    // SVG y grows downward
    let sy = |y: f64| (cy - y) / span * SIZE + SIZE / 2.0;

    let polyline = |curve: &BoundaryCurve, colour: &str, class: &str| {
        let mut pts = String::new();
        for p in curve.points.iter().chain(curve.points.first()) {
            let _ = write!(pts, "{:.3},{:.3} ", sx(p.re), sy(p.im));
        }
        format!(
            "  <polyline class=\"{class}\" fill=\"none\" stroke=\"{colour}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
            pts.trim_end()
        )
    };

    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let _ = writeln!(s, "  <title>{title}</title>");
    let _ = writeln!(
        s,
        "  <line class=\"axis\" x1=\"0\" y1=\"{y:.3}\" x2=\"{SIZE}\" y2=\"{y:.3}\" stroke=\"#999\"/>",
        y = sy(0.0)
    );
    let _ = writeln!(
        s,
        "  <line class=\"axis\" x1=\"{x:.3}\" y1=\"0\" x2=\"{x:.3}\" y2=\"{SIZE}\" stroke=\"#999\"/>",
        x = sx(0.0)
    );
    s.push_str(&polyline(target, "#1f77b4", "target"));
    s.push_str(&polyline(q, "#d62728", "q"));
    s.push_str("</svg>\n");
    s
}
