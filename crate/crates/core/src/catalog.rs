//! Built-in matroids, immersions and weak maps used by tests and the CLI.

use std::sync::Arc;

use crate::engstrom::{EngstromError, Immersion};
use crate::maps::{SetMap, SetMapError};
use crate::matroid::{Matroid, MatroidError};

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn sets(family: &[&str]) -> Vec<Vec<String>> {
    family.iter().map(|s| s.chars().map(|c| c.to_string()).collect()).collect()
}

/// The rank-3 matroid on five elements in which `1` and `2` are parallel.
pub fn explicit() -> Matroid {
    let independents = sets(&[
        "", "1", "2", "3", "4", "5", "13", "14", "15", "23", "24", "25", "34", "35", "45", "135", "145", "235", "245",
        "345",
    ]);
    Matroid::from_independents(&labels(5), &independents).expect("valid matroid")
}

/// A 3-immersion of [`explicit`] that differs from the canonical one.
pub fn explicit_immersion(m: &Matroid) -> Result<Immersion, EngstromError> {
    let assignment: Vec<(Vec<String>, Vec<usize>)> = [
        ("", vec![1, 2, 3]),
        ("12", vec![1, 2]),
        ("3", vec![1, 3]),
        ("4", vec![1, 3]),
        ("5", vec![2, 3]),
        ("1234", vec![1]),
        ("125", vec![2]),
        ("35", vec![3]),
        ("45", vec![3]),
        ("12345", vec![]),
    ]
    .into_iter()
    .map(|(f, l)| (f.chars().map(|c| c.to_string()).collect(), l))
    .collect();
    Immersion::from_flat_labels(m, 3, &assignment)
}

/// The source of the composition example; equal to `U_{3,4}`.
pub fn func_m() -> Matroid {
    let flats = sets(&["", "1", "2", "3", "4", "12", "13", "14", "23", "24", "34", "1234"]);
    Matroid::from_flats(&labels(4), &flats).expect("valid matroid")
}

/// The middle matroid of the composition example: `{2,3,4}` is a line.
pub fn func_n() -> Matroid {
    let flats = sets(&["", "1", "2", "3", "4", "12", "13", "14", "234", "1234"]);
    Matroid::from_flats(&labels(4), &flats).expect("valid matroid")
}

/// The last matroid of the composition example: `3` and `4` are parallel.
pub fn func_l() -> Matroid {
    let flats = sets(&["", "1", "2", "34", "12", "134", "234", "1234"]);
    Matroid::from_flats(&labels(4), &flats).expect("valid matroid")
}

/// Looks up `U{r},{n}`, `explicit`, `func-M`, `func-N` or `func-L`.
pub fn by_name(name: &str) -> Result<Matroid, MatroidError> {
    match name {
        "explicit" => Ok(explicit()),
        "func-M" => Ok(func_m()),
        "func-N" => Ok(func_n()),
        "func-L" => Ok(func_l()),
        _ => {
            let parsed = name
                .strip_prefix('U')
                .and_then(|rest| rest.split_once(','))
                .and_then(|(r, n)| Some((r.trim().parse().ok()?, n.trim().parse().ok()?)));
            match parsed {
                Some((r, n)) => Matroid::uniform(r, n),
                None => Err(MatroidError::UnknownCatalogName(name.to_string())),
            }
        }
    }
}

pub const CATALOG_NAMES: &[&str] = &["U1,1", "U1,3", "U2,3", "U2,4", "U3,4", "U2,5", "explicit", "func-N", "func-L"];

/// Every named catalog matroid.
pub fn catalog() -> Vec<(String, Arc<Matroid>)> {
    CATALOG_NAMES
        .iter()
        .map(|&n| (n.to_string(), Arc::new(by_name(n).expect("catalog names parse"))))
        .collect()
}

/// A named weak map between catalog matroids.
#[derive(Debug, Clone)]
pub struct CatalogMap {
    pub name: String,
    pub map: SetMap,
}

fn map(name: &str, source: &str, target: &str, pairs: Option<&[(&str, &str)]>) -> Result<CatalogMap, SetMapError> {
    let s = Arc::new(by_name(source)?);
    let t = Arc::new(by_name(target)?);
    let map = match pairs {
        Some(p) => SetMap::from_labels(s, t, p)?,
        None => SetMap::identity_on_labels(s, t)?,
    };
    Ok(CatalogMap { name: name.to_string(), map })
}

/// Weak maps among catalog matroids: the composition chain, a truncation,
/// a rank-drop to `U_{1,4}`, an annihilating deletion and some identities.
pub fn catalog_maps() -> Vec<CatalogMap> {
    [
        map("id:U3,4->func-N", "func-M", "func-N", None),
        map("id:func-N->func-L", "func-N", "func-L", None),
        map("id:U3,4->func-L", "func-M", "func-L", None),
        map("id:U3,4->U2,4", "U3,4", "U2,4", None),
        map("id:U2,4->U1,4", "U2,4", "U1,4", None),
        map("delete:U2,3", "U2,3", "U2,3", Some(&[("1", "1"), ("2", "2"), ("3", "o")])),
        map("id:U2,3", "U2,3", "U2,3", None),
        map("id:explicit", "explicit", "explicit", None),
    ]
    .into_iter()
    .map(|m| m.expect("catalog maps are well formed"))
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits;

    #[test]
    fn explicit_flats() {
        let m = explicit();
        assert_eq!(m.rank(), 3);
        let mut flats: Vec<String> = m
            .lattice()
            .flats()
            .iter()
            .map(|&f| bits::members(f).map(|i| m.elements()[i].clone()).collect::<String>())
            .collect();
        flats.sort();
        let mut expected = vec!["", "12", "3", "4", "5", "1234", "125", "35", "45", "12345"];
        expected.sort();
        assert_eq!(flats, expected);
        assert!(explicit_immersion(&m).is_ok());
    }

    #[test]
    fn names() {
        assert_eq!(by_name("U2,4").unwrap(), Matroid::uniform(2, 4).unwrap());
        assert_eq!(func_m(), Matroid::uniform(3, 4).unwrap());
        assert!(by_name("V2").is_err());
        assert_eq!(catalog().len(), CATALOG_NAMES.len());
    }

    #[test]
    fn catalog_maps_are_weak() {
        for m in catalog_maps() {
            assert!(m.map.is_weak(), "{}", m.name);
        }
    }
}
