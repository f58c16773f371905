//! SVG rendering of arc diagrams. Display only; nothing here feeds back
//! into any computation.
//!
//! Nodes sit at unit spacing on a baseline; each arc is a smooth curve
//! through one anchor per node of its closed support, pushed above or
//! below the baseline according to its letters, with height growing in the
//! arc's span. Later arcs are drawn on top of earlier ones.

use arcbrick::{ArcDiagram, Letter};

const SPACING: f64 = 60.0;
const MARGIN: f64 = 40.0;
const NODE_RADIUS: f64 = 4.0;

const PALETTE: [&str; 6] = [
    "#1f6fb4", "#c23b22", "#2a9d42", "#8a56b0", "#e08714", "#50707c",
];

fn node_x(i: usize) -> f64 {
    MARGIN + i as f64 * SPACING
}

fn arc_path(arc: &arcbrick::Arc, baseline: f64) -> String {
    let span = arc.right() - arc.left();
    let height = (14.0 + 9.0 * span as f64).min(baseline - 10.0);
    // Anchor per node of the closed support; interior anchors displaced by
    // the letter side, scaled down slightly toward the endpoints.
    let mut anchors: Vec<(f64, f64)> = vec![(node_x(arc.left()), baseline)];
    for k in arc.arrow_support() {
        let side = match arc.letter_at(k).expect("interior node") {
            Letter::U => 1.0,
            Letter::O => -1.0,
            Letter::E => 0.0,
        };
        anchors.push((node_x(k), baseline + side * height));
    }
    anchors.push((node_x(arc.right()), baseline));

    let mut d = format!("M {:.1} {:.1}", anchors[0].0, anchors[0].1);
    for pair in anchors.windows(2) {
        let (x1, y1) = pair[0];
        let (x2, y2) = pair[1];
        let mid = (x2 - x1) / 2.0;
        d.push_str(&format!(
            " C {:.1} {:.1}, {:.1} {:.1}, {:.1} {:.1}",
            x1 + mid,
            y1,
            x2 - mid,
            y2,
            x2,
            y2
        ));
    }
    d
}

pub fn diagram_to_svg(d: &ArcDiagram) -> String {
    let n = d.n();
    let width = 2.0 * MARGIN + n as f64 * SPACING;
    let max_height = 14.0 + 9.0 * n as f64;
    let baseline = max_height + 20.0;
    let height = 2.0 * baseline;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" \
         viewBox=\"0 0 {width:.0} {height:.0}\">\n"
    ));
    svg.push_str(&format!(
        "  <line x1=\"{:.1}\" y1=\"{baseline:.1}\" x2=\"{:.1}\" y2=\"{baseline:.1}\" \
         stroke=\"#cccccc\" stroke-width=\"1\"/>\n",
        node_x(0),
        node_x(n)
    ));
    // Earlier arcs first so later ones are drawn on top.
    for (idx, arc) in d.arcs().iter().enumerate().rev() {
        let color = PALETTE[idx % PALETTE.len()];
        svg.push_str(&format!(
            "  <path d=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2.5\"/>\n",
            arc_path(arc, baseline)
        ));
    }
    for i in 0..=n {
        svg.push_str(&format!(
            "  <circle cx=\"{:.1}\" cy=\"{baseline:.1}\" r=\"{NODE_RADIUS}\" fill=\"#111111\"/>\n",
            node_x(i)
        ));
        svg.push_str(&format!(
            "  <text x=\"{:.1}\" y=\"{:.1}\" font-size=\"12\" text-anchor=\"middle\" \
             fill=\"#444444\">{i}</text>\n",
            node_x(i),
            baseline + 20.0
        ));
    }
    svg.push_str("</svg>\n");
    svg
}
