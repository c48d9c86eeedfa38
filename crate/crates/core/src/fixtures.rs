//! The four example algebras shipped with the crate.

use crate::pathalg::{parse_presentation, Presentation};

pub const LAMBDA1: &str = include_str!("../fixtures/lambda1.qp");
pub const LAMBDA2_3: &str = include_str!("../fixtures/lambda2_3.qp");
pub const LAMBDA3: &str = include_str!("../fixtures/lambda3.qp");
pub const LAMBDA4: &str = include_str!("../fixtures/lambda4.qp");

/// Presentation text of the cyclic family on `m` vertices. The arrow
/// `a{i}` runs `i -> i+1` and `b{i}` runs back `i+1 -> i`.
pub fn lambda2_text(m: usize) -> String {
    assert!(m >= 1, "need at least one vertex");
    let next = |i: usize| (i + 1) % m;
    let prev = |i: usize| (i + m - 1) % m;
    let vertices: Vec<String> = (0..m).map(|i| i.to_string()).collect();
    let mut arrows: Vec<String> = (0..m).map(|i| format!("a{i}: {i} -> {}", next(i))).collect();
    arrows.extend((0..m).map(|i| format!("b{i}: {} -> {i}", next(i))));
    let mut rels = Vec::new();
    for i in 0..m {
        rels.push(format!("a{i}*a{} = 0", next(i)));
    }
    for i in 0..m {
        rels.push(format!("b{i}*b{} = 0", prev(i)));
    }
    for i in 0..m {
        rels.push(format!("a{i}*b{i} = b{}*a{}", prev(i), prev(i)));
    }
    format!(
        "quiver L2_{m}\nfield q\nvertices: {}\narrows: {}\nrelations: {}\n",
        vertices.join(" "),
        arrows.join(", "),
        rels.join("; ")
    )
}

fn parse(text: &str) -> Presentation {
    parse_presentation(text).expect("bundled fixture parses")
}

pub fn lambda1() -> Presentation {
    parse(LAMBDA1)
}

pub fn lambda2(m: usize) -> Presentation {
    parse(&lambda2_text(m))
}

pub fn lambda3() -> Presentation {
    parse(LAMBDA3)
}

pub fn lambda4() -> Presentation {
    parse(LAMBDA4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_matches_shipped_file() {
        let shipped = lambda2(3);
        let file = parse(LAMBDA2_3);
        assert_eq!(shipped.arrows, file.arrows);
        assert_eq!(shipped.relations, file.relations);
    }
}
