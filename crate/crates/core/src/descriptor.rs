//! Textual and JSON descriptions of the matroids used as hosts and forbidden restrictions.

use crate::constructions::{matchstick, origami};
use crate::error::{Error, Result};
use crate::frame::DowlingGeometry;
use crate::group::GroupTable;
use crate::matroid::{DirectSum, Graphic, Matroid, Uniform};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// A matroid named by its family and parameters.
///
/// The string form is `family:arg:arg`, for example `clique:4`, `line:5`, `dowling:3:Z2`,
/// `uniform:2:4`, `free:3`, `matchstick:4:3`, `origami:4:3`, and `sum(line:4,free:1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MatroidDescriptor {
    Uniform { rank: usize, size: usize },
    /// `U_{k,k}`.
    Free { size: usize },
    /// `U_{2,points}`.
    Line { points: usize },
    /// `M(K_t)`.
    Clique { vertices: usize },
    Graphic { vertices: usize, edges: Vec<(usize, usize)> },
    Dowling { n: usize, group: String },
    Matchstick { rank: usize, n: usize },
    Origami { rank: usize, n: usize },
    DirectSum { parts: Vec<MatroidDescriptor> },
}

impl MatroidDescriptor {
    pub fn dowling(n: usize, group: &GroupTable) -> Self {
        MatroidDescriptor::Dowling { n, group: group.label().to_string() }
    }

    pub fn build(&self) -> Result<Matroid> {
        Ok(match self {
            MatroidDescriptor::Uniform { rank, size } => Arc::new(Uniform::new(*rank, *size)?),
            MatroidDescriptor::Free { size } => Arc::new(Uniform::new(*size, *size)?),
            MatroidDescriptor::Line { points } => Arc::new(Uniform::new(2.min(*points), *points)?),
            MatroidDescriptor::Clique { vertices } => {
                if *vertices > 16 {
                    return Err(Error::InvalidDescriptor(format!("clique:{vertices} is too large")));
                }
                Arc::new(Graphic::complete(*vertices))
            }
            MatroidDescriptor::Graphic { vertices, edges } => Arc::new(Graphic::new(*vertices, edges.clone())?),
            MatroidDescriptor::Dowling { .. } => Arc::new(self.dowling_geometry()?.expect("dowling descriptor")),
            MatroidDescriptor::Matchstick { rank, n } => matchstick(*rank, *n)?,
            MatroidDescriptor::Origami { rank, n } => Arc::new(origami(*rank, *n)?),
            MatroidDescriptor::DirectSum { parts } => {
                let built = parts.iter().map(|p| p.build()).collect::<Result<Vec<_>>>()?;
                let size: usize = built.iter().map(|m| m.size()).sum();
                if size > crate::bitset::MAX_ELEMENTS {
                    return Err(Error::TooLarge { what: "direct sum", size, bound: crate::bitset::MAX_ELEMENTS });
                }
                Arc::new(DirectSum::new(built))
            }
        })
    }

    /// The geometry itself when this describes `Q_n(Γ)`.
    pub fn dowling_geometry(&self) -> Result<Option<DowlingGeometry>> {
        match self {
            MatroidDescriptor::Dowling { n, group } => {
                Ok(Some(DowlingGeometry::new(*n, Arc::new(GroupTable::from_label(group)?))?))
            }
            _ => Ok(None),
        }
    }
}

impl fmt::Display for MatroidDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatroidDescriptor::Uniform { rank, size } => write!(f, "uniform:{rank}:{size}"),
            MatroidDescriptor::Free { size } => write!(f, "free:{size}"),
            MatroidDescriptor::Line { points } => write!(f, "line:{points}"),
            MatroidDescriptor::Clique { vertices } => write!(f, "clique:{vertices}"),
            MatroidDescriptor::Graphic { vertices, edges } => {
                let es: Vec<String> = edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                write!(f, "graphic:{vertices}:{}", es.join("."))
            }
            MatroidDescriptor::Dowling { n, group } => write!(f, "dowling:{n}:{group}"),
            MatroidDescriptor::Matchstick { rank, n } => write!(f, "matchstick:{rank}:{n}"),
            MatroidDescriptor::Origami { rank, n } => write!(f, "origami:{rank}:{n}"),
            MatroidDescriptor::DirectSum { parts } => {
                let ps: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "sum({})", ps.join(","))
            }
        }
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0usize, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

impl FromStr for MatroidDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidDescriptor(s.to_string());
        if let Some(inner) = s.strip_prefix("sum(").and_then(|r| r.strip_suffix(')')) {
            let parts = split_top_level(inner).into_iter().map(str::parse).collect::<Result<Vec<_>>>()?;
            return Ok(MatroidDescriptor::DirectSum { parts });
        }
        let fields: Vec<&str> = s.split(':').collect();
        let num = |i: usize| -> Result<usize> { fields.get(i).and_then(|x| x.parse().ok()).ok_or_else(bad) };
        let arity = |k: usize| if fields.len() == k + 1 { Ok(()) } else { Err(bad()) };
        let d = match fields[0] {
            "uniform" => {
                arity(2)?;
                MatroidDescriptor::Uniform { rank: num(1)?, size: num(2)? }
            }
            "free" => {
                arity(1)?;
                MatroidDescriptor::Free { size: num(1)? }
            }
            "line" => {
                arity(1)?;
                MatroidDescriptor::Line { points: num(1)? }
            }
            "clique" => {
                arity(1)?;
                MatroidDescriptor::Clique { vertices: num(1)? }
            }
            "graphic" => {
                arity(2)?;
                let edges = fields[2]
                    .split('.')
                    .filter(|e| !e.is_empty())
                    .map(|e| {
                        let (a, b) = e.split_once('-').ok_or_else(bad)?;
                        Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                MatroidDescriptor::Graphic { vertices: num(1)?, edges }
            }
            "dowling" => {
                arity(2)?;
                GroupTable::from_label(fields[2])?;
                MatroidDescriptor::Dowling { n: num(1)?, group: fields[2].to_string() }
            }
            "matchstick" => {
                arity(2)?;
                MatroidDescriptor::Matchstick { rank: num(1)?, n: num(2)? }
            }
            "origami" => {
                arity(2)?;
                MatroidDescriptor::Origami { rank: num(1)?, n: num(2)? }
            }
            _ => return Err(bad()),
        };
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in [
            "uniform:2:4",
            "free:3",
            "line:5",
            "clique:4",
            "graphic:3:0-1.1-2",
            "dowling:3:Z2",
            "dowling:2:Z2xZ2",
            "matchstick:4:3",
            "origami:4:3",
            "sum(line:4,sum(free:1,clique:3))",
        ] {
            let d: MatroidDescriptor = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
            let json = serde_json::to_string(&d).unwrap();
            assert_eq!(serde_json::from_str::<MatroidDescriptor>(&json).unwrap(), d);
        }
        for bad in ["", "clique", "clique:x", "line:4:5", "dowling:3:Q8", "sum(line:4,nope)"] {
            assert!(bad.parse::<MatroidDescriptor>().is_err(), "{bad}");
        }
    }

    #[test]
    fn built_sizes() {
        let cases = [("clique:4", 6, 3), ("line:5", 5, 2), ("dowling:3:Z2", 9, 3), ("matchstick:5:3", 9, 5), ("origami:4:3", 10, 4), ("sum(line:4,free:1)", 5, 3)];
        for (s, size, rank) in cases {
            let m = s.parse::<MatroidDescriptor>().unwrap().build().unwrap();
            assert_eq!((m.size(), m.full_rank()), (size, rank), "{s}");
        }
    }
}
