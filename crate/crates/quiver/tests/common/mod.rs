#![allow(dead_code)]

use torsidl_linalg::Field;
use torsidl_quiver::{Algebra, QuiverPresentation, DEFAULT_PATH_BOUND};

pub fn quiver(field: Field, vertices: &[&str], arrows: &[(&str, &str, &str)], relations: &[&[&str]]) -> Algebra {
    Algebra::build(&QuiverPresentation {
        field,
        vertices: vertices.iter().map(|s| s.to_string()).collect(),
        arrows: arrows.iter().map(|(s, d, l)| (s.to_string(), d.to_string(), l.to_string())).collect(),
        relations: relations.iter().map(|p| vec![(field.one(), p.iter().map(|s| s.to_string()).collect())]).collect(),
        path_bound: DEFAULT_PATH_BOUND,
    })
    .unwrap()
}

pub fn a2(field: Field) -> Algebra {
    quiver(field, &["1", "2"], &[("1", "2", "a")], &[])
}

pub fn a3(field: Field) -> Algebra {
    quiver(field, &["1", "2", "3"], &[("1", "2", "a"), ("2", "3", "b")], &[])
}

pub fn dual_numbers(field: Field) -> Algebra {
    quiver(field, &["1"], &[("1", "1", "x")], &[&["x", "x"]])
}

pub fn kronecker(field: Field) -> Algebra {
    quiver(field, &["1", "2"], &[("1", "2", "a"), ("1", "2", "b")], &[])
}

pub fn f2() -> Field {
    Field::prime(2).unwrap()
}
