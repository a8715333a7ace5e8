//! The classification and orbit tables, and their golden copies.

use std::collections::BTreeMap;

use serde::Serialize;

use coxtype_core::admissible::{admissible_set, k_adm_0};
use coxtype_core::classifier::sweep::{classify_sweep, inequality_sweep, InequalityRow, SweepRow};
use coxtype_core::CoxeterDatum;
use coxtype_core::dl_reduction::dim_x_mu_tau_k;
use coxtype_core::Error;

use crate::grammar::{render_datum, render_element_contracted};
use crate::records::{nodes, Table1Row, Table2Row};

/// Golden tables generated at rank at most [`GOLDEN_MAX_RANK`].
pub const GOLDEN_TABLE1: &str = include_str!("../tables/table1.json");
pub const GOLDEN_TABLE2: &str = include_str!("../tables/table2.json");
pub const GOLDEN_MAX_RANK: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tables {
    pub table1: Vec<Table1Row>,
    pub table2: Vec<Table2Row>,
}

fn table1_row(row: &SweepRow, budget: i32) -> Result<Table1Row, Error> {
    let d = row.datum();
    let g = d.group();
    let adm = admissible_set(g, d.mu(), budget)?;
    let level0 = k_adm_0(&d, &adm);
    Ok(Table1Row {
        rank: d.rank(),
        datum: render_datum(&d, None),
        pairing_2rho: d.pairing_2rho(),
        coxeter_levels: row.passing.len(),
        k_adm_0: level0.iter().map(|w| render_element_contracted(g, w)).collect(),
        dim: dim_x_mu_tau_k(&d, &adm)?.value(),
        rank_ss_j_tau: d.rank_ss_j_tau(),
    })
}

fn table2_row(row: &InequalityRow) -> Result<Table2Row, Error> {
    let g = row.group.datum();
    let all = g.all_nodes();
    let d = CoxeterDatum::new(row.group.clone(), row.sigma.clone(), row.mu.clone(), coxtype_core::NodeSet::EMPTY)?;
    let twisted = row.twisted();
    Ok(Table2Row {
        rank: g.rank(),
        datum: render_datum(&d, None).rsplit_once(":K=").expect("rendered datum has a level").0.to_string(),
        sigma_orbits: row.sigma.orbits(all).into_iter().map(nodes).collect(),
        twisted_orbits: twisted.orbits(all).into_iter().map(nodes).collect(),
        rank_ss_j_tau: twisted.orbits(all).len() - 1,
        coxeter_type: row.coxeter_type,
    })
}

/// Both tables for all data of rank at most `max_rank`, sorted by rank and
/// then by datum text.
pub fn generate(max_rank: usize, budget: i32) -> Result<Tables, Error> {
    let rows = classify_sweep(max_rank, budget)?;
    let mut table1 = rows.iter().map(|r| table1_row(r, budget)).collect::<Result<Vec<_>, _>>()?;
    let mut table2 = inequality_sweep(max_rank, budget)?.iter().map(table2_row).collect::<Result<Vec<_>, _>>()?;
    table1.sort_by(|a, b| (a.rank, &a.datum).cmp(&(b.rank, &b.datum)));
    table2.sort_by(|a, b| (a.rank, &a.datum).cmp(&(b.rank, &b.datum)));
    Ok(Tables { table1, table2 })
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(rows: &[T]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("table rows serialize");
    s.push('\n');
    s
}

pub fn golden(max_rank: usize) -> Result<Tables, serde_json::Error> {
    let mut table1: Vec<Table1Row> = serde_json::from_str(GOLDEN_TABLE1)?;
    let mut table2: Vec<Table2Row> = serde_json::from_str(GOLDEN_TABLE2)?;
    table1.retain(|r| r.rank <= max_rank);
    table2.retain(|r| r.rank <= max_rank);
    Ok(Tables { table1, table2 })
}

/// Line diff keyed by datum text: `- ` for golden rows missing from the
/// generated table, `+ ` for extra rows, `~ ` for rows whose contents differ.
pub fn diff<T: Serialize + PartialEq>(name: &str, golden: &[T], generated: &[T], key: impl Fn(&T) -> &str) -> Vec<String> {
    let old: BTreeMap<&str, &T> = golden.iter().map(|r| (key(r), r)).collect();
    let new: BTreeMap<&str, &T> = generated.iter().map(|r| (key(r), r)).collect();
    let mut out = Vec::new();
    for (k, row) in &old {
        match new.get(k) {
            None => out.push(format!("{name}: - {k}")),
            Some(n) if *n != *row => out.push(format!(
                "{name}: ~ {k}\n    golden:    {}\n    generated: {}",
                serde_json::to_string(row).expect("row serializes"),
                serde_json::to_string(n).expect("row serializes")
            )),
            Some(_) => {}
        }
    }
    out.extend(new.keys().filter(|k| !old.contains_key(*k)).map(|k| format!("{name}: + {k}")));
    out
}

pub fn diff_tables(golden: &Tables, generated: &Tables) -> Vec<String> {
    let mut out = diff("table1", &golden.table1, &generated.table1, |r| &r.datum);
    out.extend(diff("table2", &golden.table2, &generated.table2, |r| &r.datum));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use coxtype_core::admissible::DEFAULT_BUDGET;

    #[test]
    fn rank_four_matches_golden() {
        let generated = generate(4, DEFAULT_BUDGET).unwrap();
        let golden = golden(4).unwrap();
        assert_eq!(diff_tables(&golden, &generated), Vec::<String>::new());
    }

    #[test]
    fn golden_is_canonical_json() {
        let golden = golden(GOLDEN_MAX_RANK).unwrap();
        assert_eq!(to_json(&golden.table1), GOLDEN_TABLE1);
        assert_eq!(to_json(&golden.table2), GOLDEN_TABLE2);
        assert_eq!(golden.table1.len(), 39);
        assert!(golden.table1.iter().all(|r| r.dim as usize == r.rank_ss_j_tau));
    }

    fn row<'a>(t: &'a Tables, datum: &str) -> &'a Table2Row {
        t.table2.iter().find(|r| r.datum == datum).unwrap_or_else(|| panic!("no row {datum}"))
    }

    #[test]
    fn orbit_rows() {
        let t = golden(GOLDEN_MAX_RANK).unwrap();
        for n in 3..=5u8 {
            let mut expected = vec![vec![0, 1]];
            expected.extend((2..=n).map(|i| vec![i]));
            let r = row(&t, &format!("B{n}:id:mu=[1{}]", ",0".repeat(n as usize - 1)));
            assert_eq!(r.twisted_orbits, expected);
            assert!(r.coxeter_type);
        }
        // The rotation by two survives the inequalities; the rotation by one
        // has a single orbit in both columns and fails them.
        let r = row(&t, "A3:rho2:mu=[0,1,0]");
        assert_eq!(r.sigma_orbits, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(r.twisted_orbits, vec![vec![0], vec![1], vec![2], vec![3]]);
        assert!(!r.coxeter_type);
        assert!(t.table2.iter().all(|r| r.datum != "A3:rho1:mu=[0,1,0]"));
        let d = crate::grammar::parse_datum("A3:rho1:mu=[0,1,0]:K={}").unwrap().datum;
        let all = d.group().datum().all_nodes();
        assert_eq!(d.sigma().orbits(all).len(), 1);
        assert_eq!(d.twisted().orbits(all).len(), 1);
        assert!(matches!(
            coxtype_core::classifier::check_condition_3(&d),
            coxtype_core::classifier::Condition3::InequalityB { pairing: 4, bound: 0 }
        ));
        // Classes that pass the inequalities but fail for every level.
        let dropped: Vec<&str> = t.table2.iter().filter(|r| !r.coxeter_type).map(|r| r.datum.as_str()).collect();
        assert_eq!(
            dropped,
            [
                "A3:rho1*sigma0:mu=[0,0,1]",
                "A3:rho2:mu=[0,1,0]",
                "D4:Ad(tau1):mu=[1,0,0,0]",
                "A5:rho1*sigma0:mu=[0,0,0,0,1]",
                "D5:Ad(tau1):mu=[1,0,0,0,0]"
            ]
        );
    }

    #[test]
    fn diff_reports_changes() {
        let golden = golden(2).unwrap();
        let mut generated = golden.clone();
        let dropped = generated.table1.remove(0);
        generated.table2[0].rank_ss_j_tau += 1;
        let lines = diff_tables(&golden, &generated);
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], format!("table1: - {}", dropped.datum));
        assert!(lines[1].starts_with("table2: ~ "));
    }
}
