use std::fmt::Write;

use num_traits::Zero;

use super::McKayGraph;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz digraph; vertices labelled `name (degree)`, edges by multiplicity.
pub fn to_dot(g: &McKayGraph) -> String {
    let alpha = g
        .alpha_index
        .map(|i| g.names[i].clone())
        .unwrap_or_else(|| "alpha".into());
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(&format!("M({},{})", g.table_name, alpha))).unwrap();
    for (i, (name, d)) in g.names.iter().zip(&g.degrees).enumerate() {
        writeln!(out, "  {i} [label={}];", quote(&format!("{name} ({d})"))).unwrap();
    }
    for (i, row) in g.adjacency.iter().enumerate() {
        for (j, m) in row.iter().enumerate() {
            if !m.is_zero() {
                writeln!(out, "  {i} -> {j} [label=\"{m}\"];").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Adjacency matrix with a header row and a leading name column.
pub fn to_csv(g: &McKayGraph) -> String {
    let mut out = String::from("from\\to");
    for name in &g.names {
        out.push(',');
        out.push_str(&csv_field(name));
    }
    out.push('\n');
    for (name, row) in g.names.iter().zip(&g.adjacency) {
        out.push_str(&csv_field(name));
        for m in row {
            write!(out, ",{m}").unwrap();
        }
        out.push('\n');
    }
    out
}
