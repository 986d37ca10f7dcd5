//! Structured vertex labels.
//!
//! Every vertex of every complex built by this crate carries a [`Label`].
//! Constructions that combine complexes (joins, copies, homotopy colimits)
//! wrap the labels of their inputs in tuples, so two different constructions
//! never produce colliding vertices and the same construction always produces
//! the same labels.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Int(i64),
    Name(String),
    /// Ordered tuple, rendered `(a,b,...)`.
    Tuple(Vec<Label>),
    /// Sorted set, rendered `{a,b,...}`.
    Set(Vec<Label>),
}

impl Label {
    pub fn name(s: impl Into<String>) -> Self {
        Label::Name(s.into())
    }

    pub fn pair(a: Label, b: Label) -> Self {
        Label::Tuple(vec![a, b])
    }

    /// Builds a set label; the members are sorted and deduplicated.
    pub fn set(mut members: Vec<Label>) -> Self {
        members.sort();
        members.dedup();
        Label::Set(members)
    }
}

impl From<i64> for Label {
    fn from(v: i64) -> Self {
        Label::Int(v)
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label::Name(s.to_string())
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        Label::Name(s)
    }
}

fn write_seq(f: &mut fmt::Formatter<'_>, open: char, items: &[Label], close: char) -> fmt::Result {
    write!(f, "{open}")?;
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{item}")?;
    }
    write!(f, "{close}")
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(v) => write!(f, "{v}"),
            Label::Name(s) => write!(f, "{s}"),
            Label::Tuple(items) => write_seq(f, '(', items, ')'),
            Label::Set(items) => write_seq(f, '{', items, '}'),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_nests() {
        let l = Label::pair(Label::Int(2), Label::set(vec!["b".into(), "a".into()]));
        assert_eq!(l.to_string(), "(2,{a,b})");
    }

    #[test]
    fn set_is_canonical() {
        assert_eq!(
            Label::set(vec![Label::Int(3), Label::Int(1), Label::Int(3)]),
            Label::Set(vec![Label::Int(1), Label::Int(3)])
        );
    }
}
