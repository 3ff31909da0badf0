//! Graphviz DOT export for visual inspection of wiring graphs.

use super::{Diagram, End, VertexKind};

pub fn to_dot(d: &Diagram) -> String {
    let mut out = String::from("graph birdtrack {\n  rankdir=BT;\n");
    let p = d.strands();
    for i in 0..p {
        out.push_str(&format!(
            "  in{i} [shape=plaintext, label=\"in{i}\"];\n  out{i} [shape=plaintext, label=\"out{i}\"];\n"
        ));
    }
    for (k, kind) in d.verts.iter().enumerate() {
        let (shape, label) = match kind {
            VertexKind::D3 => ("circle", "d"),
            VertexKind::D3Bar => ("doublecircle", "d~"),
            VertexKind::D4 => ("square", "d4"),
        };
        out.push_str(&format!("  v{k} [shape={shape}, label=\"{label}\"];\n"));
    }
    let name = |e: End| -> String {
        match e {
            End::In(i) => format!("in{i}"),
            End::Out(i) => format!("out{i}"),
            End::Vx(k) => format!("v{k}"),
        }
    };
    for e in &d.edges {
        if e.j {
            out.push_str(&format!(
                "  {} -- {} [dir=forward, arrowhead=normal, color=blue];\n",
                name(e.a),
                name(e.b)
            ));
        } else {
            out.push_str(&format!("  {} -- {};\n", name(e.a), name(e.b)));
        }
    }
    out.push_str("}\n");
    out
}
