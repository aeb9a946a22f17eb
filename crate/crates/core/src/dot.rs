//! Graphviz export of congruence lattices and Jónsson reports.

use std::fmt::Write as _;

use crate::congruence::Congruence;
use crate::jonsson::{JonssonReport, Status};
use crate::lattice::{si_from_lattice, CongruenceLattice};
use crate::lax::CentralityVerdict;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn write_graph(
    name: &str,
    lattice: &CongruenceLattice,
    monolith: Option<&Congruence>,
    mut node_attrs: impl FnMut(usize) -> String,
) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph \"{}\" {{", escape(name));
    let _ = writeln!(s, "  rankdir=BT;");
    let _ = writeln!(s, "  node [shape=box, fontname=\"monospace\"];");
    for (i, c) in lattice.elements().iter().enumerate() {
        let mut attrs = format!("label=\"{}\"", escape(&c.to_string()));
        if monolith == Some(c) {
            attrs.push_str(", penwidth=3, color=\"red\"");
        }
        attrs.push_str(&node_attrs(i));
        let _ = writeln!(s, "  n{i} [{attrs}];");
    }
    for (lo, hi) in lattice.hasse_edges() {
        let _ = writeln!(s, "  n{lo} -> n{hi} [arrowhead=none];");
    }
    s.push_str("}\n");
    s
}

/// Hasse diagram, bottom at the bottom, monolith highlighted when the
/// algebra is subdirectly irreducible.
pub fn lattice_dot(name: &str, lattice: &CongruenceLattice) -> String {
    let si = si_from_lattice(lattice);
    write_graph(name, lattice, si.monolith.as_ref(), |_| String::new())
}

/// The lattice of a report with verdicts as fill colors and maximal
/// elements drawn doubled.
pub fn report_dot(report: &JonssonReport) -> String {
    let c = &report.centralizers;
    write_graph(
        &report.algebra_name,
        &c.lattice,
        Some(&report.monolith),
        |i| {
            let fill = match &c.verdicts[i] {
                CentralityVerdict::Yes { .. } => "palegreen",
                CentralityVerdict::No { .. } => "lightgray",
                CentralityVerdict::Unknown(_) => "khaki",
            };
            let mut a = format!(", style=filled, fillcolor=\"{fill}\"");
            if let Some(k) = c.maximal.iter().position(|&m| m == i) {
                let status = report
                    .conclusions
                    .get(k)
                    .map_or(Status::Inconclusive, |cl| cl.status);
                let _ = write!(a, ", peripheries=2, xlabel=\"{status}\"");
            }
            a
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budgets;
    use crate::lattice::con_lattice;
    use crate::testing::*;

    #[test]
    fn z4_chain() {
        let l = con_lattice(&cyclic_group(4), &Budgets::default()).unwrap();
        let d = lattice_dot("Z4", &l);
        assert_eq!(d.matches("label=").count(), 3);
        assert_eq!(d.matches("->").count(), 2);
        assert_eq!(d.matches("color=\"red\"").count(), 1);
    }

    #[test]
    fn klein_diamond() {
        let l = con_lattice(&klein_four(), &Budgets::default()).unwrap();
        let d = lattice_dot("V4", &l);
        assert_eq!(d.matches("label=").count(), 5);
        assert_eq!(d.matches("->").count(), 6);
        assert!(!d.contains("red"));
    }

    #[test]
    fn trivial_single_node() {
        let a = crate::algebra::FiniteAlgebra::trivial(group_signature());
        let l = con_lattice(&a, &Budgets::default()).unwrap();
        let d = lattice_dot("one", &l);
        assert_eq!(d.matches("label=").count(), 1);
        assert_eq!(d.matches("->").count(), 0);
    }
}
