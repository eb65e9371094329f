//! JSON state I/O. Rationals travel as exact "p/q" strings, so
//! parse-then-print is the identity; only CSV decimal rendering is lossy.

use crate::dynamics::{CornerState, MapShape, PQState, XYState};
use crate::error::{Error, Result};
use crate::geometry::{LiftedPolygon, RP1Point};
use crate::kernel::Rational;
use crate::leapfrog::{LeapfrogState, Mobius};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct XyJson {
    k: usize,
    n: usize,
    x: Vec<Rational>,
    y: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PqJson {
    k: usize,
    n: usize,
    p: Vec<Rational>,
    q: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CornerJson {
    n: usize,
    #[serde(rename = "X")]
    x: Vec<Rational>,
    #[serde(rename = "Y")]
    y: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolygonJson {
    k: usize,
    n: usize,
    vertices: Vec<Vec<Rational>>,
    monodromy: Vec<Vec<Rational>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LeapfrogJson {
    n: usize,
    s_minus: Vec<[Rational; 2]>,
    s: Vec<[Rational; 2]>,
    monodromy: Vec<Vec<Rational>>,
}

/// Any of the five serializable state kinds.
#[derive(Clone, Debug)]
pub enum State {
    Xy(XYState),
    Pq(PQState),
    Corner(CornerState),
    Polygon(LiftedPolygon),
    Leapfrog(LeapfrogState),
}

impl State {
    pub fn kind(&self) -> &'static str {
        match self {
            State::Xy(_) => "xy",
            State::Pq(_) => "pq",
            State::Corner(_) => "corner",
            State::Polygon(_) => "polygon",
            State::Leapfrog(_) => "leapfrog",
        }
    }
}

fn jerr(e: serde_json::Error) -> Error {
    Error::InvalidInput(e.to_string())
}

/// Detects the schema by its distinguishing field, then parses strictly
/// (unknown fields are named in the error).
pub fn parse_state(text: &str) -> Result<State> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(jerr)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::InvalidInput("expected a JSON object".into()))?;
    if obj.contains_key("vertices") {
        let j: PolygonJson = serde_json::from_value(value).map_err(jerr)?;
        let shape = MapShape::new(j.k, j.n)?;
        if j.vertices.len() != j.n {
            return Err(Error::InvalidInput("vertex count does not match n".into()));
        }
        Ok(State::Polygon(LiftedPolygon::new(shape, j.vertices, j.monodromy)?))
    } else if obj.contains_key("s_minus") {
        let j: LeapfrogJson = serde_json::from_value(value).map_err(jerr)?;
        let mk = |pts: Vec<[Rational; 2]>| -> Result<Vec<RP1Point>> {
            pts.into_iter().map(|[u, v]| RP1Point::new(u, v)).collect()
        };
        let m = j.monodromy;
        if m.len() != 2 || m.iter().any(|r| r.len() != 2) {
            return Err(Error::InvalidInput("monodromy must be 2x2".into()));
        }
        let mono = Mobius::new(
            m[0][0].clone(),
            m[0][1].clone(),
            m[1][0].clone(),
            m[1][1].clone(),
        )?;
        if j.s.len() != j.n {
            return Err(Error::InvalidInput("point count does not match n".into()));
        }
        Ok(State::Leapfrog(LeapfrogState::new(mk(j.s_minus)?, mk(j.s)?, mono)?))
    } else if obj.contains_key("p") {
        let j: PqJson = serde_json::from_value(value).map_err(jerr)?;
        Ok(State::Pq(PQState::new(MapShape::new(j.k, j.n)?, j.p, j.q)?))
    } else if obj.contains_key("X") {
        let j: CornerJson = serde_json::from_value(value).map_err(jerr)?;
        if j.x.len() != j.n {
            return Err(Error::InvalidInput("coordinate count does not match n".into()));
        }
        Ok(State::Corner(CornerState::new(j.x, j.y)?))
    } else if obj.contains_key("x") {
        let j: XyJson = serde_json::from_value(value).map_err(jerr)?;
        Ok(State::Xy(XYState::new(MapShape::new(j.k, j.n)?, j.x, j.y)?))
    } else {
        Err(Error::InvalidInput(
            "unrecognized state schema: expected one of the fields \
             x / p / X / vertices / s_minus"
                .into(),
        ))
    }
}

pub fn state_to_json(state: &State) -> String {
    let v = match state {
        State::Xy(s) => serde_json::to_value(XyJson {
            k: s.shape().k(),
            n: s.shape().n(),
            x: s.x().to_vec(),
            y: s.y().to_vec(),
        }),
        State::Pq(s) => serde_json::to_value(PqJson {
            k: s.shape().k(),
            n: s.shape().n(),
            p: s.p().to_vec(),
            q: s.q().to_vec(),
        }),
        State::Corner(s) => serde_json::to_value(CornerJson {
            n: s.n(),
            x: s.x().to_vec(),
            y: s.y().to_vec(),
        }),
        State::Polygon(p) => serde_json::to_value(PolygonJson {
            k: p.shape().k(),
            n: p.shape().n(),
            vertices: p.vertices().to_vec(),
            monodromy: p.monodromy().to_vec(),
        }),
        State::Leapfrog(s) => {
            let pts = |v: &[RP1Point]| -> Vec<[Rational; 2]> {
                v.iter().map(|p| [p.u().clone(), p.v().clone()]).collect()
            };
            let m = s.monodromy().entries();
            serde_json::to_value(LeapfrogJson {
                n: s.n(),
                s_minus: pts(s.s_minus()),
                s: pts(s.s()),
                monodromy: vec![
                    vec![m[0][0].clone(), m[0][1].clone()],
                    vec![m[1][0].clone(), m[1][1].clone()],
                ],
            })
        }
    };
    serde_json::to_string_pretty(&v.expect("state serialization cannot fail")).unwrap()
}
