//! Deterministic, versioned ASCII serialization of diagrams.
//!
//! Format (version 1):
//! `btk1 <family> <flavors> <verts> <edges>` where flavors is a string over
//! `v`/`w` (`w` = V̄), verts over `d`/`b`/`q` (d3, d3bar, d4) or `-`, and
//! edges are `;`-separated `A~B` or `A>B` (symplectic arrow), each end being
//! `i<k>`, `o<k>` or `x<k>`.

use super::{Diagram, DiagramError, Edge, End, Family, Flavor, Signature, VertexKind};

pub fn serialize_diagram(d: &Diagram) -> String {
    let flavors: String = d
        .sig
        .0
        .iter()
        .map(|f| match f {
            Flavor::V => 'v',
            Flavor::Vbar => 'w',
        })
        .collect();
    let verts: String = d
        .verts
        .iter()
        .map(|k| match k {
            VertexKind::D3 => 'd',
            VertexKind::D3Bar => 'b',
            VertexKind::D4 => 'q',
        })
        .collect();
    let end = |e: End| -> String {
        match e {
            End::In(i) => format!("i{i}"),
            End::Out(i) => format!("o{i}"),
            End::Vx(k) => format!("x{k}"),
        }
    };
    let edges: Vec<String> = d
        .edges
        .iter()
        .map(|e| {
            format!(
                "{}{}{}",
                end(e.a),
                if e.j { ">" } else { "~" },
                end(e.b)
            )
        })
        .collect();
    format!(
        "btk1 {} {} {} {}",
        d.family.name(),
        if flavors.is_empty() { "-" } else { &flavors },
        if verts.is_empty() { "-" } else { &verts },
        if edges.is_empty() {
            "-".to_string()
        } else {
            edges.join(";")
        }
    )
}

pub fn parse_diagram(text: &str) -> Result<Diagram, DiagramError> {
    let bad = |m: &str| DiagramError::MalformedWiring(m.to_string());
    let mut it = text.split_whitespace();
    let magic = it.next().ok_or_else(|| bad("empty input"))?;
    if magic != "btk1" {
        return Err(bad("unknown serialization version"));
    }
    let family = match it.next().ok_or_else(|| bad("missing family"))? {
        "su" => Family::Su,
        "so" => Family::So,
        "sp" => Family::Sp,
        "e6" => Family::E6,
        "e7" => Family::E7,
        other => return Err(bad(&format!("unknown family {other}"))),
    };
    let flavors = it.next().ok_or_else(|| bad("missing flavors"))?;
    let sig = if flavors == "-" {
        Signature(vec![])
    } else {
        Signature(
            flavors
                .chars()
                .map(|c| match c {
                    'v' => Ok(Flavor::V),
                    'w' => Ok(Flavor::Vbar),
                    _ => Err(bad("bad flavor char")),
                })
                .collect::<Result<_, _>>()?,
        )
    };
    let verts_text = it.next().ok_or_else(|| bad("missing verts"))?;
    let verts = if verts_text == "-" {
        vec![]
    } else {
        verts_text
            .chars()
            .map(|c| match c {
                'd' => Ok(VertexKind::D3),
                'b' => Ok(VertexKind::D3Bar),
                'q' => Ok(VertexKind::D4),
                _ => Err(bad("bad vertex char")),
            })
            .collect::<Result<_, _>>()?
    };
    let edges_text = it.next().ok_or_else(|| bad("missing edges"))?;
    let parse_end = |s: &str| -> Result<End, DiagramError> {
        let (tag, num) = s.split_at(1);
        let k: u8 = num.parse().map_err(|_| bad("bad end index"))?;
        match tag {
            "i" => Ok(End::In(k)),
            "o" => Ok(End::Out(k)),
            "x" => Ok(End::Vx(k)),
            _ => Err(bad("bad end tag")),
        }
    };
    let mut edges = Vec::new();
    if edges_text != "-" {
        for part in edges_text.split(';') {
            let (sep, j) = if part.contains('>') {
                ('>', true)
            } else {
                ('~', false)
            };
            let mut ends = part.split(sep);
            let a = parse_end(ends.next().ok_or_else(|| bad("bad edge"))?)?;
            let b = parse_end(ends.next().ok_or_else(|| bad("bad edge"))?)?;
            edges.push(Edge { a, b, j });
        }
    }
    let d = Diagram {
        family,
        sig,
        verts,
        edges,
    };
    d.validate()?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let d = Diagram::identity(Family::So, Signature::all_v(3));
        let s = serialize_diagram(&d);
        assert_eq!(parse_diagram(&s).unwrap(), d);
    }
}
