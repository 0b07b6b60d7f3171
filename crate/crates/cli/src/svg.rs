//! Standalone SVG plots of curves in a parameter rectangle.

use std::fmt::Write;

use morse_core::contour::Polyline;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const MARGIN: f64 = 50.0;

pub struct Layer<'a> {
    pub name: &'a str,
    pub polylines: &'a [Polyline],
    pub color: &'a str,
    pub dashed: bool,
}

pub struct Plot<'a> {
    pub title: String,
    /// `[x_min, x_max, y_min, y_max]` in parameter coordinates.
    pub window: [f64; 4],
    pub axes: (&'a str, &'a str),
    pub layers: Vec<Layer<'a>>,
    /// Filled dots with a text label.
    pub markers: Vec<(f64, f64, String)>,
    /// Plain text labels.
    pub labels: Vec<(f64, f64, String)>,
}

impl Plot<'_> {
    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        let [x0, x1, y0, y1] = self.window;
        let px = MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
        // larger y goes up
        let py = HEIGHT - MARGIN - (y - y0) / (y1 - y0) * (HEIGHT - 2.0 * MARGIN);
        (px, py)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" width="{WIDTH}" height="{HEIGHT}">"#
        );
        let _ = writeln!(out, "<title>{}</title>", escape(&self.title));
        let _ = writeln!(out, r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
        let (l, b) = (MARGIN, HEIGHT - MARGIN);
        let (r, t) = (WIDTH - MARGIN, MARGIN);
        let _ = writeln!(
            out,
            r##"<rect x="{l}" y="{t}" width="{}" height="{}" fill="none" stroke="#999" stroke-width="1"/>"##,
            r - l,
            b - t
        );
        let [x0, x1, y0, y1] = self.window;
        let _ = writeln!(
            out,
            r##"<g font-family="sans-serif" font-size="12" fill="#444"><text x="{l}" y="{}">{x0:.4}</text><text x="{r}" y="{}" text-anchor="end">{x1:.4}</text><text x="{}" y="{b}" text-anchor="end">{y0:.4}</text><text x="{}" y="{}" text-anchor="end">{y1:.4}</text><text x="{}" y="{}" text-anchor="middle">{}</text><text x="{}" y="{}" text-anchor="middle">{}</text></g>"##,
            b + 16.0,
            b + 16.0,
            l - 4.0,
            l - 4.0,
            t + 10.0,
            (l + r) / 2.0,
            b + 32.0,
            escape(self.axes.0),
            l - 30.0,
            (t + b) / 2.0,
            escape(self.axes.1),
        );
        for layer in &self.layers {
            let dash = if layer.dashed { r#" stroke-dasharray="2 3""# } else { "" };
            let _ = writeln!(
                out,
                r#"<g id="{}" fill="none" stroke="{}" stroke-width="1.5"{dash}>"#,
                escape(layer.name),
                layer.color
            );
            for line in layer.polylines {
                if line.points.len() < 2 {
                    continue;
                }
                let pts: Vec<String> = line
                    .points
                    .iter()
                    .map(|&(x, y)| {
                        let (px, py) = self.map(x, y);
                        format!("{px:.2},{py:.2}")
                    })
                    .collect();
                let _ = writeln!(out, r#"<polyline points="{}"/>"#, pts.join(" "));
            }
            let _ = writeln!(out, "</g>");
        }
        let _ = writeln!(out, r#"<g id="markers" font-family="sans-serif" font-size="14">"#);
        for (x, y, name) in &self.markers {
            let (px, py) = self.map(*x, *y);
            let _ = writeln!(
                out,
                r#"<circle class="marker" data-name="{n}" cx="{px:.2}" cy="{py:.2}" r="4" fill="black"/><text x="{:.2}" y="{:.2}">{n}</text>"#,
                px + 6.0,
                py - 6.0,
                n = escape(name)
            );
        }
        let _ = writeln!(out, "</g>");
        let _ = writeln!(out, r#"<g id="labels" font-family="sans-serif" font-size="13" text-anchor="middle">"#);
        for (x, y, text) in &self.labels {
            let (px, py) = self.map(*x, *y);
            let _ = writeln!(out, r#"<text x="{px:.2}" y="{py:.2}">{}</text>"#, escape(text));
        }
        let _ = writeln!(out, "</g>");
        out.push_str("</svg>\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corners_map_to_the_frame_with_y_up() {
        let plot = Plot {
            title: "t".into(),
            window: [0.0, 2.0, 0.0, 1.0],
            axes: ("x", "y"),
            layers: vec![],
            markers: vec![],
            labels: vec![],
        };
        assert_eq!(plot.map(0.0, 0.0), (MARGIN, HEIGHT - MARGIN));
        assert_eq!(plot.map(2.0, 1.0), (WIDTH - MARGIN, MARGIN));
    }

    #[test]
    fn dashed_layers_and_escaping() {
        let line = [Polyline { points: vec![(0.0, 0.0), (1.0, 1.0)] }];
        let plot = Plot {
            title: "a<b".into(),
            window: [0.0, 1.0, 0.0, 1.0],
            axes: ("x", "y"),
            layers: vec![Layer { name: "z", polylines: &line, color: "red", dashed: true }],
            markers: vec![(0.5, 0.5, "A".into())],
            labels: vec![],
        };
        let svg = plot.render();
        assert!(svg.contains("stroke-dasharray"));
        assert!(svg.contains("a&lt;b"));
        assert!(svg.contains(r#"data-name="A""#));
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
