//! SVG drawing of rational nets in the affine chart `z = 1`.

use std::fmt::Write;

use knet_core::{KNetConfig, NumberField, ProjLine, ProjPoint, Scalar};
use thiserror::Error;

const CANVAS: f64 = 600.0;
const MARGIN: f64 = 20.0;
const LEGEND_ROW: f64 = 18.0;
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RenderError {
    #[error("NonRealConfiguration: coordinates lie in {0}, not in Q")]
    NonRealConfiguration(String),
    #[error("empty view box")]
    EmptyViewBox,
}

/// `[xmin, ymin, xmax, ymax]` in chart coordinates.
pub type ViewBox = [f64; 4];

#[derive(Clone, Debug, PartialEq)]
pub struct Rendering {
    pub svg: String,
    pub lines_drawn: usize,
    /// Lines not drawn: the line at infinity or lines missing the view box.
    pub lines_listed: usize,
    pub points_drawn: usize,
    /// Points at infinity or outside the view box.
    pub points_listed: usize,
}

fn to_f64(s: &Scalar) -> f64 {
    s.to_f64().expect("rational coordinate")
}

fn chart(p: &ProjPoint) -> Option<(f64, f64)> {
    let [x, y, z] = p.coords();
    (!z.is_zero()).then(|| (to_f64(&(x / z)), to_f64(&(y / z))))
}

fn auto_view(points: &[(f64, f64)]) -> ViewBox {
    if points.is_empty() {
        return [-1.0, -1.0, 1.0, 1.0];
    }
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in points {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let pad = ((x1 - x0).max(y1 - y0) * 0.25).max(1.0);
    [x0 - pad, y0 - pad, x1 + pad, y1 + pad]
}

/// The segment of `ax + by + c = 0` inside the box, if any.
fn clip(line: &ProjLine, v: &ViewBox) -> Option<[(f64, f64); 2]> {
    let [a, b, c] = line.coords().clone().map(|s| to_f64(&s));
    let [x0, y0, x1, y1] = *v;
    let mut hits: Vec<(f64, f64)> = vec![];
    if b != 0.0 {
        for x in [x0, x1] {
            let y = -(a * x + c) / b;
            if (y0..=y1).contains(&y) {
                hits.push((x, y));
            }
        }
    }
    if a != 0.0 {
        for y in [y0, y1] {
            let x = -(b * y + c) / a;
            if (x0..=x1).contains(&x) {
                hits.push((x, y));
            }
        }
    }
    hits.sort_by(|p, q| p.partial_cmp(q).expect("finite"));
    let (first, last) = (*hits.first()?, *hits.last()?);
    (first != last).then_some([first, last])
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

/// Draws a net over `Q`. Equal inputs give byte-identical output.
pub fn render_svg(net: &KNetConfig, view: Option<ViewBox>) -> Result<Rendering, RenderError> {
    let field: &NumberField = net.field();
    if !field.is_rationals() {
        return Err(RenderError::NonRealConfiguration(field.to_string()));
    }
    let finite: Vec<(f64, f64)> = net.points().iter().filter_map(chart).collect();
    let v = view.unwrap_or_else(|| auto_view(&finite));
    let [x0, y0, x1, y1] = v;
    if !(x1 > x0 && y1 > y0) {
        return Err(RenderError::EmptyViewBox);
    }
    let scale = CANVAS / (x1 - x0).max(y1 - y0);
    let px = |(x, y): (f64, f64)| (MARGIN + (x - x0) * scale, MARGIN + (y1 - y) * scale);
    let plot_h = (y1 - y0) * scale + 2.0 * MARGIN;
    let width = (x1 - x0) * scale + 2.0 * MARGIN;

    let mut body = String::new();
    let mut legend: Vec<(String, &str)> = vec![];
    let mut lines_drawn = 0;
    let mut lines_listed = 0;
    writeln!(body, "<g id=\"lines\" stroke-width=\"1.5\">").unwrap();
    for (ci, class) in net.classes().iter().enumerate() {
        let color = COLORS[ci % COLORS.len()];
        for (li, line) in class.lines().iter().enumerate() {
            let label = format!("l{}{}", ci + 1, li + 1);
            let [a, b, _] = line.coords();
            if a.is_zero() && b.is_zero() {
                legend.push((format!("{label} = {line} (line at infinity)"), color));
                lines_listed += 1;
                continue;
            }
            match clip(line, &v) {
                Some([p, q]) => {
                    let ((ax, ay), (bx, by)) = (px(p), px(q));
                    writeln!(
                        body,
                        "<line class=\"c{}\" id=\"{label}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{color}\"/>",
                        ci + 1,
                        num(ax),
                        num(ay),
                        num(bx),
                        num(by)
                    )
                    .unwrap();
                    lines_drawn += 1;
                }
                None => {
                    legend.push((format!("{label} = {line} (outside the view)"), color));
                    lines_listed += 1;
                }
            }
        }
    }
    writeln!(body, "</g>").unwrap();

    let mut points_drawn = 0;
    let mut points_listed = 0;
    writeln!(body, "<g id=\"points\" fill=\"black\">").unwrap();
    for (i, p) in net.points().iter().enumerate() {
        match chart(p) {
            Some((x, y)) if (x0..=x1).contains(&x) && (y0..=y1).contains(&y) => {
                let (cx, cy) = px((x, y));
                writeln!(body, "<circle id=\"p{}\" cx=\"{}\" cy=\"{}\" r=\"3.5\"/>", i + 1, num(cx), num(cy)).unwrap();
                points_drawn += 1;
            }
            Some(_) => {
                legend.push((format!("p{} = {p} (outside the view)", i + 1), "black"));
                points_listed += 1;
            }
            None => {
                legend.push((format!("p{} = {p} (at infinity)", i + 1), "black"));
                points_listed += 1;
            }
        }
    }
    writeln!(body, "</g>").unwrap();

    let height = plot_h + LEGEND_ROW * legend.len() as f64 + if legend.is_empty() { 0.0 } else { MARGIN };
    let mut svg = String::new();
    writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        num(width),
        num(height),
        num(width),
        num(height)
    )
    .unwrap();
    let d = net.degree().map_or("?".to_string(), |d| d.to_string());
    writeln!(
        svg,
        "<!-- k = {}, d = {d}, {} lines, {} points; view [{}, {}] x [{}, {}] -->",
        net.k(),
        lines_drawn + lines_listed,
        points_drawn + points_listed,
        num(x0),
        num(x1),
        num(y0),
        num(y1)
    )
    .unwrap();
    writeln!(svg, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>").unwrap();
    svg.push_str(&body);
    if !legend.is_empty() {
        writeln!(svg, "<g id=\"legend\" font-family=\"monospace\" font-size=\"12\">").unwrap();
        for (i, (text, color)) in legend.iter().enumerate() {
            let y = plot_h + MARGIN / 2.0 + LEGEND_ROW * (i as f64 + 0.5);
            writeln!(svg, "<text x=\"{}\" y=\"{}\" fill=\"{color}\">{text}</text>", num(MARGIN), num(y)).unwrap();
        }
        writeln!(svg, "</g>").unwrap();
    }
    writeln!(svg, "</svg>").unwrap();
    Ok(Rendering { svg, lines_drawn, lines_listed, points_drawn, points_listed })
}
