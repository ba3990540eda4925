use std::fmt;
use std::ops::{Add, Neg};

use serde::{Deserialize, Serialize};

use crate::scalar::{Sign, Z2};

/// The four codimension-one self-intersection types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CeKind {
    /// Elliptic tangency.
    E,
    /// Hyperbolic tangency.
    H,
    /// Triple point.
    T,
    /// Quadruple point.
    Q,
}

impl CeKind {
    pub fn is_tangency(self) -> bool {
        matches!(self, CeKind::E | CeKind::H)
    }
}

/// One event of a generic regular homotopy. `sign` is the crossing direction
/// relative to the permanent co-orientation; only `T` events consume it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CEEvent {
    pub kind: CeKind,
    #[serde(default)]
    pub sign: Sign,
}

impl CEEvent {
    pub fn new(kind: CeKind, sign: Sign) -> Self {
        CEEvent { kind, sign }
    }

    pub fn positive(kind: CeKind) -> Self {
        CEEvent::new(kind, Sign::Plus)
    }
}

/// An ordered record of the events along a regular homotopy.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EventLog {
    pub events: Vec<CEEvent>,
}

impl EventLog {
    pub fn new(events: Vec<CEEvent>) -> Self {
        EventLog { events }
    }

    /// The same homotopy run backwards: events in reverse order, each crossed
    /// in the opposite direction.
    pub fn reversed(&self) -> EventLog {
        EventLog {
            events: self
                .events
                .iter()
                .rev()
                .map(|e| CEEvent::new(e.kind, -e.sign))
                .collect(),
        }
    }

    pub fn concat(&self, other: &EventLog) -> EventLog {
        EventLog {
            events: self.events.iter().chain(&other.events).copied().collect(),
        }
    }
}

/// An element `n₁t + n₂p + n₃q` of `G_U = Z t ⊕ (Z/2) p ⊕ (Z/2) q`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UniversalValue {
    pub t: i64,
    pub p: Z2,
    pub q: Z2,
}

impl UniversalValue {
    pub const ZERO: UniversalValue = UniversalValue {
        t: 0,
        p: Z2::ZERO,
        q: Z2::ZERO,
    };

    pub fn new(t: i64, p: bool, q: bool) -> Self {
        UniversalValue {
            t,
            p: p.into(),
            q: q.into(),
        }
    }
}

impl Add for UniversalValue {
    type Output = UniversalValue;
    fn add(self, rhs: UniversalValue) -> UniversalValue {
        UniversalValue {
            t: self.t + rhs.t,
            p: self.p + rhs.p,
            q: self.q + rhs.q,
        }
    }
}

impl Neg for UniversalValue {
    type Output = UniversalValue;
    fn neg(self) -> UniversalValue {
        UniversalValue { t: -self.t, ..self }
    }
}

impl fmt::Display for UniversalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.t {
            0 => {}
            1 => parts.push("t".to_string()),
            -1 => parts.push("-t".to_string()),
            t => parts.push(format!("{t}t")),
        }
        if !self.p.is_zero() {
            parts.push("p".into());
        }
        if !self.q.is_zero() {
            parts.push("q".into());
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// The universal order-one invariant, relative to the start of the log:
/// signed count of `T` events, parity of tangencies (`E`, `H`) and parity of
/// quadruple points.
///
/// The absolute invariant depends on a base immersion; an empty log is 0.
pub fn f1u(events: &[CEEvent]) -> UniversalValue {
    events.iter().fold(UniversalValue::ZERO, |mut acc, e| {
        match e.kind {
            CeKind::T => acc.t += e.sign.as_i64(),
            CeKind::E | CeKind::H => acc.p += Z2::ONE,
            CeKind::Q => acc.q += Z2::ONE,
        }
        acc
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(kind: CeKind) -> CEEvent {
        CEEvent::positive(kind)
    }

    #[test]
    fn f1u_examples() {
        assert_eq!(f1u(&[]), UniversalValue::ZERO);
        let log = [
            ev(CeKind::T),
            ev(CeKind::E),
            ev(CeKind::T),
            ev(CeKind::Q),
            ev(CeKind::H),
        ];
        assert_eq!(f1u(&log), UniversalValue::new(2, false, true));
        assert_eq!(f1u(&log).to_string(), "2t + q");
    }

    #[test]
    fn negative_triple_points() {
        let log = [CEEvent::new(CeKind::T, Sign::Minus), ev(CeKind::E)];
        assert_eq!(f1u(&log), UniversalValue::new(-1, true, false));
    }

    #[test]
    fn event_json() {
        let s = r#"{"events":[{"kind":"T","sign":1},{"kind":"E","sign":-1},{"kind":"Q"}]}"#;
        let log: EventLog = serde_json::from_str(s).unwrap();
        assert_eq!(log.events[2], ev(CeKind::Q));
        assert_eq!(log.events[1].sign, Sign::Minus);
        assert!(serde_json::from_str::<EventLog>(r#"{"events":[{"kind":"T","sign":2}]}"#).is_err());
    }
}
