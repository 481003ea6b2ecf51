use std::fmt::Write;

use crate::{table_to_monomial, CatalanError, CatalanTable, Parity};

/// Chord diagram of a table as a Graphviz `graph`.
pub fn render_chords(table: &CatalanTable, n: usize) -> Result<String, CatalanError> {
    let m = table_to_monomial(table, n)?;
    let mut s = String::new();
    writeln!(s, "graph chords {{").unwrap();
    writeln!(s, "  layout=circo;").unwrap();
    writeln!(s, "  node [shape=circle];").unwrap();
    for i in 0..n {
        writeln!(s, "  p{i};").unwrap();
    }
    for (r, t) in &m.chords {
        writeln!(s, "  p{r} -- p{t} [color=green, kind=chord];").unwrap();
    }
    for t in &m.threads {
        let color = match t.parity {
            Parity::Even => "orange",
            Parity::Odd => "blue",
        };
        writeln!(s, "  p{} -- p{} [color={color}, kind=thread, parity={}];", t.pair.0, t.pair.1, t.parity.as_str()).unwrap();
    }
    s.push_str("}\n");
    Ok(s)
}
