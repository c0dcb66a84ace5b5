//! Named permutation groups: cyclic, dihedral, symmetric, alternating, `SL(2,3)`, `Q8`,
//! and direct products written `AxB`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{generate_group_with, Group, Limits};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tags {
    pub soluble: bool,
    pub simple: bool,
    pub notes: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub expected_order: u64,
    pub tags: Tags,
}

impl CatalogEntry {
    pub fn group(&self) -> Result<Group> {
        self.group_with(Limits::default())
    }

    /// Generates the group and checks its order against `expected_order`.
    pub fn group_with(&self, limits: Limits) -> Result<Group> {
        let group = generate_group_with(self.degree, &self.generators, limits)?;
        if group.order() as u64 != self.expected_order {
            return Err(Error::Internal(format!(
                "{} generated order {}, expected {}",
                self.name,
                group.order(),
                self.expected_order
            )));
        }
        Ok(group)
    }
}

/// Entries listed by `catalog` and used by corpus verification.
pub fn shipped_names() -> Vec<String> {
    let mut names = Vec::new();
    names.extend((1..=30).map(|n| format!("C{n}")));
    names.extend((1..=12).map(|n| format!("D{}", 2 * n)));
    names.extend((1..=5).map(|n| format!("S{n}")));
    names.extend((1..=6).map(|n| format!("A{n}")));
    names.extend(
        ["Q8", "SL(2,3)", "S3xS3", "C2xA4", "C2xS4", "C3xS3", "D10xC3", "S4xC5", "A5xC2"]
            .map(String::from),
    );
    names
}

pub fn shipped_catalog() -> Vec<CatalogEntry> {
    shipped_names()
        .iter()
        .map(|n| catalog_lookup(n).expect("shipped entries parse"))
        .collect()
}

/// Shipped entries of order at most `max_order`, in catalog order.
pub fn corpus(max_order: u64) -> Vec<CatalogEntry> {
    shipped_catalog()
        .into_iter()
        .filter(|e| e.expected_order <= max_order)
        .collect()
}

/// Resolves a catalog name. Products `AxB` (or `A×B`) act on the disjoint union of
/// the factors' points.
pub fn catalog_lookup(name: &str) -> Result<CatalogEntry> {
    let trimmed = name.trim();
    let unknown = || Error::UnknownGroup {
        name: trimmed.to_string(),
        available: format!(
            "Cn, D2n, Sn, An, Q8, SL(2,3), products AxB; shipped: {}",
            shipped_names().join(", ")
        ),
    };
    if let Some((left, right)) = trimmed.split_once(['x', '×']) {
        let a = catalog_lookup(left).map_err(|_| unknown())?;
        let b = catalog_lookup(right).map_err(|_| unknown())?;
        return Ok(direct_product(&a, &b, trimmed));
    }
    basic_entry(trimmed).ok_or_else(unknown)
}

fn direct_product(a: &CatalogEntry, b: &CatalogEntry, name: &str) -> CatalogEntry {
    let degree = a.degree + b.degree;
    let generators = a
        .generators
        .iter()
        .map(|g| g.shifted(0, degree))
        .chain(b.generators.iter().map(|g| g.shifted(a.degree, degree)))
        .collect();
    let simple = match (a.expected_order, b.expected_order) {
        (1, _) => b.tags.simple,
        (_, 1) => a.tags.simple,
        _ => false,
    };
    CatalogEntry {
        name: name.to_string(),
        degree,
        generators,
        expected_order: a.expected_order * b.expected_order,
        tags: Tags {
            soluble: a.tags.soluble && b.tags.soluble,
            simple,
            notes: format!("direct product of {} and {}", a.name, b.name),
        },
    }
}

fn cycles(degree: usize, list: &[&[usize]]) -> Permutation {
    let owned: Vec<Vec<usize>> = list.iter().map(|c| c.to_vec()).collect();
    Permutation::from_cycles(degree, &owned).expect("catalog cycles are valid")
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn basic_entry(name: &str) -> Option<CatalogEntry> {
    let entry = |degree, generators, expected_order, soluble, simple, notes: &str| CatalogEntry {
        name: name.to_string(),
        degree,
        generators,
        expected_order,
        tags: Tags {
            soluble,
            simple,
            notes: notes.to_string(),
        },
    };
    match name {
        "Q8" => return Some(entry(8, sl23_matrices(&[[0, 2, 1, 0], [1, 1, 1, 2]]), 8, true, false, "quaternion group, Sylow 2-subgroup of SL(2,3)")),
        "SL(2,3)" | "SL23" => {
            return Some(entry(8, sl23_matrices(&[[1, 1, 0, 1], [1, 0, 1, 1]]), 24, true, false, "acting on the nonzero vectors of F3^2"))
        }
        _ => {}
    }
    let (kind, digits) = name.split_at(1);
    let n: usize = digits.parse().ok().filter(|&n| n >= 1)?;
    let all: Vec<usize> = (1..=n).collect();
    let prime = crate::primes::is_prime(n as u64);
    match kind {
        "C" => {
            let gens = if n > 1 { vec![cycles(n, &[&all])] } else { vec![] };
            Some(entry(n, gens, n as u64, true, prime, "cyclic"))
        }
        "D" if n.is_multiple_of(2) => {
            let m = n / 2;
            let (degree, gens) = match m {
                1 => (2, vec![cycles(2, &[&[1, 2]])]),
                2 => (4, vec![cycles(4, &[&[1, 2], &[3, 4]]), cycles(4, &[&[1, 3], &[2, 4]])]),
                _ => {
                    let pairs: Vec<[usize; 2]> = (2..).map(|k| [k, m + 2 - k]).take_while(|[a, b]| a < b).collect();
                    let refl: Vec<&[usize]> = pairs.iter().map(|p| &p[..]).collect();
                    let rotation: Vec<usize> = (1..=m).collect();
                    (m, vec![cycles(m, &[&rotation]), cycles(m, &refl)])
                }
            };
            Some(entry(degree, gens, n as u64, true, m == 1, "dihedral of order n"))
        }
        "S" => {
            let gens = match n {
                1 => vec![],
                2 => vec![cycles(2, &[&[1, 2]])],
                _ => vec![cycles(n, &[&all]), cycles(n, &[&[1, 2]])],
            };
            Some(entry(n, gens, factorial(n as u64), n <= 4, n == 2, "symmetric"))
        }
        "A" => {
            let gens = (3..=n).map(|k| cycles(n, &[&[1, 2, k]])).collect();
            let order = if n < 2 { 1 } else { factorial(n as u64) / 2 };
            Some(entry(n, gens, order, n <= 4, n == 3 || n >= 5, "alternating"))
        }
        _ => None,
    }
}

/// Permutations of the eight nonzero vectors of `F3²` induced by `v ↦ vM` for
/// matrices `M = [a b; c d]`.
fn sl23_matrices(mats: &[[u8; 4]]) -> Vec<Permutation> {
    let vectors: Vec<(u8, u8)> = (0..3)
        .flat_map(|x| (0..3).map(move |y| (x, y)))
        .filter(|&v| v != (0, 0))
        .collect();
    mats.iter()
        .map(|&[a, b, c, d]| {
            let images = vectors
                .iter()
                .map(|&(x, y)| {
                    let image = ((x * a + y * c) % 3, (x * b + y * d) % 3);
                    vectors.iter().position(|&v| v == image).unwrap() as u32
                })
                .collect();
            Permutation::from_images(images).expect("invertible matrix")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_orders_verify() {
        for entry in shipped_catalog() {
            let g = entry.group().unwrap();
            assert_eq!(g.order() as u64, entry.expected_order, "{}", entry.name);
            assert_eq!(g.whole().is_soluble(), entry.tags.soluble, "{}", entry.name);
        }
    }

    #[test]
    fn products_and_unknowns() {
        let e = catalog_lookup("S4xC5").unwrap();
        assert_eq!((e.degree, e.expected_order), (9, 120));
        assert!(matches!(catalog_lookup("Z7"), Err(Error::UnknownGroup { .. })));
        assert_eq!(catalog_lookup("C1").unwrap().group().unwrap().order(), 1);
    }
}
