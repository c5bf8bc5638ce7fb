//! The worked tables shipped with the crate, embedded at compile time.
//!
//! | name | what it is |
//! |------|------------|
//! | `T_ex1` | order 7 D-loop that is not an IP-loop |
//! | `T_ex2` | order 6 proper D-loop |
//! | `T_ex3` | order 6 loop isotopic to `T_ex2`, not a D-loop |
//! | `T_ex4_ip` | order 7 IP-loop |
//! | `T_ex4_d` | D-loop obtained from `T_ex4_ip` with `a = 2` |
//! | `T_ex4_star` | quasigroup isotopic to `T_ex4_d`, no identity |
//! | `T_ex5_grp` | a group of order 8 |
//! | `T_ex5_d` | `T_ex5_grp` after exchanging tracks 6 and 8 |
//! | `T_ex6` | order 8 D-loop without decomposable track pairs |
//! | `T_ex5a` | order 8 D-loop with three decomposable pairs |
//! | `T_41` .. `T_44` | the four isotopy classes of proper D-loops of order 6 |

use crate::table::{Loop, Table};

pub const NAMES: [&str; 14] = [
    "T_ex1",
    "T_ex2",
    "T_ex3",
    "T_ex4_ip",
    "T_ex4_d",
    "T_ex4_star",
    "T_ex5_grp",
    "T_ex5_d",
    "T_ex6",
    "T_ex5a",
    "T_41",
    "T_42",
    "T_43",
    "T_44",
];

/// Raw file contents of a fixture.
pub fn text(name: &str) -> &'static str {
    match name {
        "T_ex1" => include_str!("../fixtures/T_ex1.tbl"),
        "T_ex2" => include_str!("../fixtures/T_ex2.tbl"),
        "T_ex3" => include_str!("../fixtures/T_ex3.tbl"),
        "T_ex4_ip" => include_str!("../fixtures/T_ex4_ip.tbl"),
        "T_ex4_d" => include_str!("../fixtures/T_ex4_d.tbl"),
        "T_ex4_star" => include_str!("../fixtures/T_ex4_star.tbl"),
        "T_ex5_grp" => include_str!("../fixtures/T_ex5_grp.tbl"),
        "T_ex5_d" => include_str!("../fixtures/T_ex5_d.tbl"),
        "T_ex6" => include_str!("../fixtures/T_ex6.tbl"),
        "T_ex5a" => include_str!("../fixtures/T_ex5a.tbl"),
        "T_41" => include_str!("../fixtures/T_41.tbl"),
        "T_42" => include_str!("../fixtures/T_42.tbl"),
        "T_43" => include_str!("../fixtures/T_43.tbl"),
        "T_44" => include_str!("../fixtures/T_44.tbl"),
        _ => panic!("unknown fixture {name:?}"),
    }
}

/// Parsed fixture. Panics on an unknown name.
pub fn table(name: &str) -> Table {
    Table::parse(text(name)).expect("fixtures are valid tables")
}

/// Parsed fixture as a loop. Panics if it has no identity.
pub fn get_loop(name: &str) -> Loop {
    Loop::new(table(name)).unwrap_or_else(|_| panic!("fixture {name} is not a loop"))
}

/// The fixtures that are loops, in [`NAMES`] order.
pub fn loops() -> Vec<(&'static str, Loop)> {
    NAMES.iter().filter_map(|&n| table(n).to_loop().map(|l| (n, l))).collect()
}
