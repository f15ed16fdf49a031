//! Staircase plot for n = 2: generator dots, the staircase boundary of
//! the ideal, compact facet segments labeled with their primitive
//! normals, essential-set points ringed, and integral-closure generators
//! that are not input generators drawn hollow. Pure integer layout, so
//! the output bytes are a function of the input alone.

use std::collections::BTreeSet;

use residua::{essential_sets, ExponentVector, MonomialTuple};

const SCALE: i64 = 40;
const MARGIN: i64 = 50;

fn coord(x: &num_bigint::BigInt) -> Result<i64, String> {
    i64::try_from(x).map_err(|_| format!("coordinate {x} too large to plot"))
}

fn point(e: &ExponentVector) -> Result<(i64, i64), String> {
    Ok((coord(e.get(0))?, coord(e.get(1))?))
}

pub fn render_staircase_svg(tuple: &MonomialTuple, variables: &[String]) -> Result<String, String> {
    if tuple.dim() != 2 {
        return Err(format!(
            "staircase plots require n = 2, input has n = {}",
            tuple.dim()
        ));
    }
    let a = tuple.ideal();
    if let Some(i) = a.uncovered_variable() {
        return Err(format!(
            "variable '{}' has no pure power generator; the staircase is unbounded",
            variables[i]
        ));
    }
    let closure = a.integral_closure().map_err(|e| e.to_string())?;
    let sets = essential_sets(tuple).map_err(|e| e.to_string())?;
    let np = tuple.newton_polyhedron();

    let entries: Vec<(i64, i64)> = tuple
        .entries()
        .iter()
        .map(point)
        .collect::<Result<_, _>>()?;
    let hollow: Vec<(i64, i64)> = closure
        .gens()
        .iter()
        .filter(|g| !tuple.entries().contains(g))
        .map(point)
        .collect::<Result<_, _>>()?;
    let ringed: BTreeSet<usize> = sets
        .iter()
        .flat_map(|e| e.indices.iter().copied())
        .collect();
    let steps: Vec<(i64, i64)> = a.gens().iter().map(point).collect::<Result<_, _>>()?;

    let xmax = 1 + entries.iter().chain(&hollow).map(|p| p.0).max().unwrap();
    let ymax = 1 + entries.iter().chain(&hollow).map(|p| p.1).max().unwrap();
    let width = 2 * MARGIN + xmax * SCALE;
    let height = 2 * MARGIN + ymax * SCALE;
    let px = |x: i64| MARGIN + x * SCALE;
    let py = |y: i64| MARGIN + (ymax - y) * SCALE;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\" font-family=\"monospace\" font-size=\"14\">\n"
    ));
    svg.push_str(&format!(
        "  <line class=\"axis\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#000\"/>\n",
        px(0),
        py(0),
        px(xmax),
        py(0)
    ));
    svg.push_str(&format!(
        "  <line class=\"axis\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#000\"/>\n",
        px(0),
        py(0),
        px(0),
        py(ymax)
    ));
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\">{}</text>\n",
        px(xmax) + 8,
        py(0) + 5,
        variables[0]
    ));
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\">{}</text>\n",
        px(0) - 8,
        py(ymax) - 10,
        variables[1]
    ));

    // Staircase boundary over the minimal generators, which the lex order
    // lists with x ascending and y descending.
    let mut path = format!("M {} {}", px(steps[0].0), py(ymax));
    path.push_str(&format!(" L {} {}", px(steps[0].0), py(steps[0].1)));
    for i in 1..steps.len() {
        path.push_str(&format!(" L {} {}", px(steps[i].0), py(steps[i - 1].1)));
        path.push_str(&format!(" L {} {}", px(steps[i].0), py(steps[i].1)));
    }
    path.push_str(&format!(" L {} {}", px(xmax), py(steps[steps.len() - 1].1)));
    svg.push_str(&format!(
        "  <path class=\"staircase\" d=\"{path}\" fill=\"none\" stroke=\"#888\" \
         stroke-dasharray=\"4 3\"/>\n"
    ));

    for f in np.compact_facets() {
        let on_facet: Vec<(i64, i64)> = f.touching.iter().map(|&i| entries[i]).collect();
        let a_end = *on_facet.iter().min().unwrap();
        let b_end = *on_facet.iter().max().unwrap();
        svg.push_str(&format!(
            "  <line class=\"facet\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" \
             stroke=\"#16a\" stroke-width=\"2\"/>\n",
            px(a_end.0),
            py(a_end.1),
            px(b_end.0),
            py(b_end.1)
        ));
        let mx = (px(a_end.0) + px(b_end.0)) / 2;
        let my = (py(a_end.1) + py(b_end.1)) / 2;
        svg.push_str(&format!(
            "  <text class=\"facet-label\" x=\"{}\" y=\"{}\" fill=\"#16a\">({},{})</text>\n",
            mx + 8,
            my + 16,
            f.normal.get(0),
            f.normal.get(1)
        ));
    }

    for (x, y) in &hollow {
        svg.push_str(&format!(
            "  <circle class=\"closure\" cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"#fff\" \
             stroke=\"#555\" stroke-width=\"2\"/>\n",
            px(*x),
            py(*y)
        ));
    }
    for (x, y) in &entries {
        svg.push_str(&format!(
            "  <circle class=\"generator\" cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"#000\"/>\n",
            px(*x),
            py(*y)
        ));
    }
    for i in &ringed {
        let (x, y) = entries[*i];
        svg.push_str(&format!(
            "  <circle class=\"essential\" cx=\"{}\" cy=\"{}\" r=\"9\" fill=\"none\" \
             stroke=\"#c22\" stroke-width=\"2\"/>\n",
            px(x),
            py(y)
        ));
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
