//! Named dimension vectors with `p = 2`, plus the two excluded families
//! that lie in the fundamental set but outside Σ.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ade::{append_hrr, attach_as_extension, mir, AdeType};
use crate::error::{Error, Result};
use crate::graph::{DimVector, GraphBuilder, WeightedGraph};

/// A family name with its parameters. Parameters are stored in normalised
/// form (e.g. `l <= m <= n`, unordered pairs sorted), so equal names build
/// equal graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum FamilyName {
    /// Two weight-1 vertices joined by three strings of the given lengths.
    ILmn(u32, u32, u32),
    /// `I(D_m,n)`; `prime` joins the two leaves on the same branch vertex.
    ID { m: u32, n: u32, prime: bool },
    /// `I(E_6,n)` or `I(E_7,n)`.
    IE { e: u32, n: u32 },
    IM(u32),
    Ia,
    Ib,
    Ic,
    II(AdeType, AdeType),
    IIM(u32),
    IIa,
    IIb,
    IIID { m: u32, i: u32 },
    IIIE7,
    IIIE8,
    IIIMn { m: u32, n: u32 },
    IIIa,
    IIIb,
    XI(AdeType, AdeType, u32),
    XIII(AdeType),
}

/// Which of the three unbalanced-vertex patterns a family realises.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum TypeTag {
    I,
    II,
    III,
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TypeTag::I => "I",
            TypeTag::II => "II",
            TypeTag::III => "III",
        })
    }
}

fn bad(msg: String) -> Error {
    Error::InvalidParameters(msg)
}

impl FamilyName {
    /// Checks parameter ranges and normalises symmetric parameters.
    pub fn normalized(self) -> Result<Self> {
        use FamilyName::*;
        Ok(match self {
            ILmn(a, b, c) => {
                let mut v = [a, b, c];
                v.sort();
                if v[0] < 1 {
                    return Err(bad("I(l,m,n) needs 1 <= l <= m <= n".into()));
                }
                ILmn(v[0], v[1], v[2])
            }
            ID { m, n, prime } => {
                if m < 4 {
                    return Err(bad(format!("I(D{m},{n}) needs m >= 4")));
                }
                ID { m, n, prime }
            }
            IE { e, n } => {
                if e != 6 && e != 7 {
                    return Err(bad(format!("I(E{e},{n}) exists only for E6 and E7")));
                }
                IE { e, n }
            }
            IM(m) | IIM(m) if m < 4 => return Err(bad(format!("{self} needs m >= 4"))),
            II(a, b) => {
                a.validate()?;
                b.validate()?;
                II(a.min(b), a.max(b))
            }
            IIID { m, i } => {
                if m < 4 || i < 1 || i > m - 3 {
                    return Err(bad(format!("III(D{m},{i}) needs m >= 4 and 1 <= i <= m-3")));
                }
                IIID { m, i: i.min(m - 2 - i) }
            }
            IIIMn { m, n } => {
                if m < 4 || !(6..=8).contains(&n) {
                    return Err(bad(format!("III({m},{n}) needs m >= 4 and n in 6..=8")));
                }
                IIIMn { m, n }
            }
            XI(a, b, n) => {
                a.validate()?;
                b.validate()?;
                if n < 1 {
                    return Err(bad("X-I(D1,D2,n) needs n >= 1".into()));
                }
                XI(a.min(b), a.max(b), n)
            }
            XIII(a) => XIII(a.validate()?),
            other => other,
        })
    }

    pub fn type_tag(self) -> TypeTag {
        use FamilyName::*;
        match self {
            ILmn(..) | ID { .. } | IE { .. } | IM(_) | Ia | Ib | Ic | XI(..) => TypeTag::I,
            II(..) | IIM(_) | IIa | IIb => TypeTag::II,
            IIID { .. } | IIIE7 | IIIE8 | IIIMn { .. } | IIIa | IIIb | XIII(_) => TypeTag::III,
        }
    }

    /// Whether this is one of the two families excluded from Σ.
    pub fn is_excluded(self) -> bool {
        matches!(self, FamilyName::XI(..) | FamilyName::XIII(_))
    }

    /// The parameter grid used by the golden checks: every family with
    /// integer parameters at most `max` and Dynkin ranks at most `max`.
    pub fn grid(max: u32) -> Vec<FamilyName> {
        use FamilyName::*;
        let mut out = Vec::new();
        for l in 1..=max {
            for m in l..=max {
                for n in m..=max {
                    out.push(ILmn(l, m, n));
                }
            }
        }
        for m in 4..=max {
            for n in 0..=max {
                out.push(ID { m, n, prime: false });
                out.push(ID { m, n, prime: true });
            }
        }
        for e in [6, 7] {
            for n in 0..=max {
                out.push(IE { e, n });
            }
        }
        for m in 4..=max {
            out.push(IM(m));
        }
        out.extend([Ia, Ib, Ic]);
        let types = dynkin_types_up_to(max);
        for (k, &a) in types.iter().enumerate() {
            for &b in &types[k..] {
                out.push(II(a, b));
            }
        }
        for m in 4..=max {
            out.push(IIM(m));
        }
        out.extend([IIa, IIb]);
        for m in 4..=max {
            for i in 1..=(m - 3).div_ceil(2) {
                out.push(IIID { m, i });
            }
        }
        out.extend([IIIE7, IIIE8]);
        for m in 4..=max {
            for n in 6..=8 {
                out.push(IIIMn { m, n });
            }
        }
        out.extend([IIIa, IIIb]);
        out
    }

    /// Excluded-family instances: `X-I` with chain length at most `max_n`
    /// and both Dynkin ranks at most `max_rank`, and `X-III` up to `max_rank`.
    pub fn excluded_grid(max_rank: u32, max_n: u32) -> Vec<FamilyName> {
        let types = dynkin_types_up_to(max_rank);
        let mut out = Vec::new();
        for (k, &a) in types.iter().enumerate() {
            for &b in &types[k..] {
                for n in 1..=max_n {
                    out.push(FamilyName::XI(a, b, n));
                }
            }
        }
        out.extend(types.iter().map(|&t| FamilyName::XIII(t)));
        out
    }
}

/// `A_0..A_max`, `D_4..D_max`, and the E types of rank at most `max`.
pub fn dynkin_types_up_to(max: u32) -> Vec<AdeType> {
    let mut v: Vec<AdeType> = (0..=max).map(AdeType::A).collect();
    v.extend((4..=max).map(AdeType::D));
    v.extend((6..=max.min(8)).map(AdeType::E));
    v
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilyName::*;
        match self {
            ILmn(l, m, n) => write!(f, "I({l},{m},{n})"),
            ID { m, n, prime } => write!(f, "I(D{m},{n}){}", if *prime { "'" } else { "" }),
            IE { e, n } => write!(f, "I(E{e},{n})"),
            IM(m) => write!(f, "I({m})"),
            Ia => f.write_str("Ia"),
            Ib => f.write_str("Ib"),
            Ic => f.write_str("Ic"),
            II(a, b) => write!(f, "II({a},{b})"),
            IIM(m) => write!(f, "II({m})"),
            IIa => f.write_str("IIa"),
            IIb => f.write_str("IIb"),
            IIID { m, i } => write!(f, "III(D{m},{i})"),
            IIIE7 => f.write_str("III(E7)"),
            IIIE8 => f.write_str("III(E8)"),
            IIIMn { m, n } => write!(f, "III({m},{n})"),
            IIIa => f.write_str("IIIa"),
            IIIb => f.write_str("IIIb"),
            XI(a, b, n) => write!(f, "X-I({a},{b},{n})"),
            XIII(a) => write!(f, "X-III(2{a})"),
        }
    }
}

/// Grammar (whitespace ignored):
///
/// ```text
/// name  := "Ia" | "Ib" | "Ic" | "IIa" | "IIb" | "IIIa" | "IIIb"
///        | "I(" int "," int "," int ")"      I(l,m,n)
///        | "I(" int ")"                      I(m)
///        | "I(" dyn "," int ")" ["'"]        I(D_m,n), I(E6,n), I(E7,n)
///        | "II(" dyn "," dyn ")"             II(D1,D2)
///        | "II(" dyn ")" ["'"]               alias for I(dyn,0)
///        | "II(" int ")"                     II(m)
///        | "III(" dyn ["," int] ")"          III(D_m,i), III(E7), III(E8)
///        | "III(" int "," int ")"            III(m,n)
///        | "X-I(" dyn "," dyn "," int ")"
///        | "X-III(2" dyn ")"
/// dyn   := ("A" | "D" | "E") ["_"] int
/// ```
impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use FamilyName::*;
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let perr = || Error::Parse(format!("unrecognised family name '{s}'"));
        match s.as_str() {
            "Ia" => return Ok(Ia),
            "Ib" => return Ok(Ib),
            "Ic" => return Ok(Ic),
            "IIa" => return Ok(IIa),
            "IIb" => return Ok(IIb),
            "IIIa" => return Ok(IIIa),
            "IIIb" => return Ok(IIIb),
            _ => {}
        }
        let (body, prime) = match s.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (s.as_str(), false),
        };
        let open = body.find('(').ok_or_else(perr)?;
        let head = &body[..open];
        let inner = body[open + 1..].strip_suffix(')').ok_or_else(perr)?;
        let args: Vec<&str> = inner.split(',').collect();
        let int = |x: &str| x.parse::<u32>().map_err(|_| perr());
        let dynk = |x: &str| x.parse::<AdeType>();
        let is_int = |x: &str| x.parse::<u32>().is_ok();
        let name = match (head, args.as_slice(), prime) {
            ("I", [a, b, c], false) => ILmn(int(a)?, int(b)?, int(c)?),
            ("I", [a], false) => IM(int(a)?),
            ("I", [d, n], _) => match dynk(d)? {
                AdeType::D(m) => ID { m, n: int(n)?, prime },
                AdeType::E(e) if !prime => IE { e, n: int(n)? },
                _ => return Err(perr()),
            },
            ("II", [a], false) if is_int(a) => IIM(int(a)?),
            ("II", [d], _) => match dynk(d)? {
                AdeType::D(m) => ID { m, n: 0, prime },
                AdeType::E(e) if !prime => IE { e, n: 0 },
                _ => return Err(perr()),
            },
            ("II", [a, b], false) => II(dynk(a)?, dynk(b)?),
            ("III", [a, b], false) if is_int(a) => IIIMn { m: int(a)?, n: int(b)? },
            ("III", [d, i], false) => match dynk(d)? {
                AdeType::D(m) => IIID { m, i: int(i)? },
                _ => return Err(perr()),
            },
            ("III", [d], false) => match dynk(d)? {
                AdeType::E(7) => IIIE7,
                AdeType::E(8) => IIIE8,
                _ => return Err(perr()),
            },
            ("X-I", [a, b, n], false) => XI(dynk(a)?, dynk(b)?, int(n)?),
            ("X-III", [d], false) => XIII(dynk(d.strip_prefix('2').ok_or_else(perr)?)?),
            _ => return Err(perr()),
        };
        name.normalized().map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Joins builder vertices `p` and `q` by a chain of `n` edges through new
/// weight-1 vertices; `n = 0` identifies them.
fn join(b: &mut GraphBuilder, p: usize, q: usize, n: u32) {
    if n == 0 {
        b.merge(p, q);
        return;
    }
    let mut prev = p;
    for _ in 1..n {
        let v = b.vertex(1);
        b.edge(prev, v, 1);
        prev = v;
    }
    b.edge(prev, q, 1);
}

fn pendant(b: &mut GraphBuilder, at: usize, w: i64) -> usize {
    let v = b.vertex(w);
    b.edge(at, v, 1);
    v
}

fn append_mir(b: &mut GraphBuilder, t: AdeType) -> usize {
    let (g, d) = mir(t).expect("validated type");
    b.append(&g, &d)
}

/// Builds the weighted graph and dimension vector named by `f`.
pub fn build_family(f: FamilyName) -> Result<(WeightedGraph, DimVector)> {
    use FamilyName::*;
    let f = f.normalized()?;
    let mut b = GraphBuilder::new();
    match f {
        ILmn(l, m, n) => {
            let u = b.vertex(1);
            let v = b.vertex(1);
            for k in [l, m, n] {
                join(&mut b, u, v, k);
            }
        }
        ID { m, n, prime } => {
            // Leaves of mir(D_m): 0 and m on the first branch vertex,
            // m-2 and m-1 on the last.
            append_mir(&mut b, AdeType::D(m));
            let m = m as usize;
            if prime {
                join(&mut b, m - 2, m - 1, n);
            } else {
                join(&mut b, 0, m - 2, n);
            }
        }
        IE { e: 6, n } => {
            append_mir(&mut b, AdeType::E(6));
            join(&mut b, 0, 4, n);
        }
        IE { e: _, n } => {
            append_mir(&mut b, AdeType::E(7));
            join(&mut b, 5, 7, n);
        }
        IM(m) => {
            let mut w = vec![1, 2];
            w.extend(std::iter::repeat(3).take(m as usize - 3));
            w.extend([2, 1]);
            let c = b.chain(&w);
            pendant(&mut b, c[2], 1);
            pendant(&mut b, c[m as usize - 2], 1);
        }
        Ia => {
            let c = b.chain(&[3, 4, 3, 2, 1]);
            pendant(&mut b, c[1], 2);
            pendant(&mut b, c[0], 1);
            pendant(&mut b, c[0], 1);
        }
        Ib => {
            let c = b.chain(&[5, 4, 3, 2, 1]);
            for _ in 0..2 {
                let t = pendant(&mut b, c[0], 3);
                pendant(&mut b, t, 1);
            }
        }
        Ic => {
            let c = b.chain(&[3, 4, 5, 6, 4, 2]);
            pendant(&mut b, c[3], 3);
            pendant(&mut b, c[0], 1);
            pendant(&mut b, c[0], 1);
        }
        II(a, c) => {
            let centre = b.vertex(1);
            attach_as_extension(&mut b, a, centre);
            attach_as_extension(&mut b, c, centre);
        }
        IIM(m) => {
            let mut w = vec![4; m as usize - 3];
            w.extend([3, 2, 1]);
            let c = b.chain(&w);
            pendant(&mut b, c[0], 2);
            pendant(&mut b, c[0], 2);
            pendant(&mut b, c[m as usize - 4], 1);
        }
        IIa => {
            let c = b.chain(&[1, 4, 5, 6, 4, 2]);
            pendant(&mut b, c[1], 2);
            pendant(&mut b, c[3], 3);
        }
        IIb => {
            let c = b.chain(&[1, 4, 7, 10, 8, 6, 4, 2]);
            pendant(&mut b, c[3], 5);
        }
        IIID { m, i } => {
            append_mir(&mut b, AdeType::D(m));
            pendant(&mut b, i as usize, 1);
        }
        IIIE7 => {
            append_mir(&mut b, AdeType::E(7));
            pendant(&mut b, 6, 1);
        }
        IIIE8 => {
            append_mir(&mut b, AdeType::E(8));
            pendant(&mut b, 0, 1);
        }
        IIIMn { m, n } => {
            let v = append_hrr(&mut b, AdeType::E(n))[0];
            let mut end = v;
            for _ in 0..m - 4 {
                end = pendant(&mut b, end, 2);
            }
            pendant(&mut b, end, 1);
            pendant(&mut b, end, 1);
        }
        IIIa => {
            let c = b.chain(&[1, 2, 3, 4, 5, 4, 3, 2, 1]);
            pendant(&mut b, c[4], 2);
        }
        IIIb => {
            let c = b.chain(&[2, 5, 8, 7, 6, 5, 4, 3, 2, 1]);
            pendant(&mut b, c[2], 4);
        }
        XI(a, c, n) => {
            let o1 = append_mir(&mut b, a);
            let o2 = append_mir(&mut b, c);
            join(&mut b, o1 + a.rank() as usize, o2 + c.rank() as usize, n);
        }
        XIII(a) => {
            let off = append_mir(&mut b, a);
            for v in off..b.len() {
                let w = b.weight(v);
                b.set_weight(v, 2 * w);
            }
            pendant(&mut b, off + a.rank() as usize, 1);
        }
    }
    let (g, d) = b.build();
    debug_assert!(g.is_connected());
    Ok((g, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for f in FamilyName::grid(6).into_iter().chain(FamilyName::excluded_grid(4, 2)) {
            let s = f.to_string();
            assert_eq!(s.parse::<FamilyName>().unwrap(), f, "{s}");
        }
    }

    #[test]
    fn aliases() {
        assert_eq!("II(D4)".parse::<FamilyName>().unwrap(), FamilyName::ID { m: 4, n: 0, prime: false });
        assert_eq!("II(E6)".parse::<FamilyName>().unwrap(), FamilyName::IE { e: 6, n: 0 });
        assert_eq!("III(D7,3)".parse::<FamilyName>().unwrap(), FamilyName::IIID { m: 7, i: 2 });
        assert_eq!("I(3,1,2)".parse::<FamilyName>().unwrap(), FamilyName::ILmn(1, 2, 3));
        assert!("I(E8,1)".parse::<FamilyName>().is_err());
        assert!("III(3,6)".parse::<FamilyName>().is_err());
        assert!("X-I(A0,A0,0)".parse::<FamilyName>().is_err());
    }

    #[test]
    fn small_builds() {
        let (g, a) = build_family(FamilyName::ILmn(1, 1, 1)).unwrap();
        assert_eq!(g.n_vertices(), 2);
        assert_eq!(g.edge_mult(0, 1), 3);
        assert_eq!(a.as_slice(), &[1, 1]);
        let (g, a) = build_family(FamilyName::II(AdeType::A(0), AdeType::A(0))).unwrap();
        assert_eq!((g.n_vertices(), g.loops(0), a[0]), (1, 2, 1));
        let (g, _) = build_family(FamilyName::XI(AdeType::A(0), AdeType::A(0), 1)).unwrap();
        assert_eq!((g.n_vertices(), g.loops(0), g.loops(1), g.edge_mult(0, 1)), (2, 1, 1, 1));
        let (g, a) = build_family(FamilyName::IIID { m: 4, i: 1 }).unwrap();
        assert_eq!(g.n_vertices(), 6);
        assert_eq!(g.degree(1), 5);
        assert_eq!(a[1], 2);
    }
}
