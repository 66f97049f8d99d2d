use std::fmt::Write;

use super::{Color, GraphOfGroups, GroupDescriptor};

fn group_label(group: &GroupDescriptor) -> String {
    match group {
        GroupDescriptor::CyclicOnGenerator { generator } => format!("<{generator}>"),
        GroupDescriptor::ChunkParabolic { chunk } => {
            let names: Vec<&str> = chunk.vertices().iter().map(|v| v.as_str()).collect();
            format!("A{{{}}}", names.join(","))
        }
        GroupDescriptor::FreeAbelianPair { base, symbol, central } => {
            format!("<{base}, {symbol}>\\n{symbol} = {central}")
        }
        GroupDescriptor::CyclicOnWord { symbol, word } => format!("<{symbol}>\\n{symbol} = {word}"),
    }
}

fn escape(s: &str) -> String {
    s.replace('"', "\\\"")
}

/// Graphviz rendering: black vertices filled black with white text, white
/// vertices unfilled, red vertices filled red. Loops are self-edges labelled
/// by their stable letter; red edges are labelled `r^m = z`.
pub fn to_dot(j: &GraphOfGroups) -> String {
    let mut out = String::from("graph jsj {\n");
    for v in &j.vertices {
        let style = match v.color {
            Color::Black => "style=filled, fillcolor=black, fontcolor=white",
            Color::White => "shape=circle",
            Color::Red => "style=filled, fillcolor=red",
        };
        writeln!(out, "  \"{}\" [label=\"{}\", {style}];", escape(&v.id), escape(&group_label(&v.group))).unwrap();
    }
    for e in &j.edges {
        let (s, t) = (escape(&j.vertices[e.source].id), escape(&j.vertices[e.target].id));
        let red = j.vertices[e.source].color == Color::Red || j.vertices[e.target].color == Color::Red;
        if let Some(letter) = &e.stable_letter {
            writeln!(out, "  \"{s}\" -- \"{t}\" [label=\"{}\"];", escape(letter)).unwrap();
        } else if red {
            let m = e.target_image.letters().first().map_or(1, |l| l.exp);
            writeln!(out, "  \"{s}\" -- \"{t}\" [label=\"r^{m} = z\"];").unwrap();
        } else {
            writeln!(out, "  \"{s}\" -- \"{t}\";").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
