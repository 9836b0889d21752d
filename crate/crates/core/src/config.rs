//! JSON configuration files describing a polygon.
//!
//! ```json
//! {"angles_radians": [0.0, 1.2, 3.5]}
//! {"angles_degrees": [0, 90, 180, 270], "min_gap": 1e-6}
//! {"preset": {"star": 5}}
//! {"preset": {"triangle": 6, "s": 0.1}}
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::{star, triangle_config};
use crate::polygon::{make_polygon, GreatPolygon, DEFAULT_MIN_GAP};

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Preset {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangle: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angles_radians: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angles_degrees: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<Preset>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_gap: Option<f64>,
}

impl ConfigFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: ConfigFile = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }

    /// Config listing the polygon's vertex angles in radians.
    pub fn from_polygon(poly: &GreatPolygon) -> Self {
        ConfigFile {
            angles_radians: Some(poly.angles_radians()),
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let given = [
            self.angles_radians.is_some(),
            self.angles_degrees.is_some(),
            self.preset.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if given != 1 {
            return Err(Error::Config(
                "exactly one of angles_radians, angles_degrees or preset is required".into(),
            ));
        }
        for list in [&self.angles_radians, &self.angles_degrees].into_iter().flatten() {
            if list.len() < 2 {
                return Err(Error::Config(format!(
                    "need at least 2 angles, got {}",
                    list.len()
                )));
            }
        }
        if let Some(p) = &self.preset {
            match (p.star, p.triangle) {
                (Some(_), None) if p.s.is_some() => {
                    return Err(Error::Config("'s' only applies to the triangle preset".into()))
                }
                (Some(_), None) | (None, Some(_)) => {}
                _ => {
                    return Err(Error::Config(
                        "preset needs exactly one of 'star' or 'triangle'".into(),
                    ))
                }
            }
        }
        if let Some(g) = self.min_gap {
            if !(g.is_finite() && g >= 0.0) {
                return Err(Error::Config(format!(
                    "min_gap must be a non-negative number, got {g}"
                )));
            }
        }
        Ok(())
    }

    pub fn to_polygon(&self) -> Result<GreatPolygon> {
        self.validate()?;
        let min_gap = self.min_gap.unwrap_or(DEFAULT_MIN_GAP);
        if let Some(r) = &self.angles_radians {
            return make_polygon(r, min_gap);
        }
        if let Some(d) = &self.angles_degrees {
            let r: Vec<f64> = d.iter().map(|x| x.to_radians()).collect();
            return make_polygon(&r, min_gap);
        }
        let p = self.preset.as_ref().expect("validated");
        match (p.star, p.triangle) {
            (Some(n), _) => Ok(star(n)?.0),
            (_, Some(n)) => Ok(triangle_config(n, p.s)?.0),
            _ => unreachable!("validated"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::regular_polygon;

    #[test]
    fn parses_each_form() {
        let p = ConfigFile::from_json(r#"{"angles_radians": [0, 1.5707963267948966, 3.141592653589793]}"#)
            .unwrap()
            .to_polygon()
            .unwrap();
        assert_eq!(p.n(), 3);
        let p = ConfigFile::from_json(r#"{"angles_degrees": [0, 90, 180, 270]}"#)
            .unwrap()
            .to_polygon()
            .unwrap();
        assert_eq!(p, regular_polygon(4).unwrap());
        let p = ConfigFile::from_json(r#"{"preset": {"star": 5}}"#)
            .unwrap()
            .to_polygon()
            .unwrap();
        assert_eq!(p.n(), 5);
        let p = ConfigFile::from_json(r#"{"preset": {"triangle": 6, "s": 0.1}}"#)
            .unwrap()
            .to_polygon()
            .unwrap();
        assert_eq!(p.n(), 6);
    }

    #[test]
    fn rejects_bad_schemas() {
        for text in [
            r#"{}"#,
            r#"{"angles_radians": [0, 1], "preset": {"star": 4}}"#,
            r#"{"angles_radians": [0]}"#,
            r#"{"preset": {"star": 4, "triangle": 5}}"#,
            r#"{"preset": {"star": 4, "s": 0.1}}"#,
            r#"{"preset": {}}"#,
            r#"{"angles": [0, 1]}"#,
            r#"{"angles_radians": [0, 1], "min_gap": -1}"#,
            r#"not json"#,
        ] {
            assert!(
                matches!(ConfigFile::from_json(text), Err(Error::Config(_))),
                "{text}"
            );
        }
    }

    #[test]
    fn near_duplicate_is_polygon_error() {
        let cfg = ConfigFile::from_json(r#"{"angles_radians": [0, 1e-9]}"#).unwrap();
        assert!(matches!(cfg.to_polygon(), Err(Error::NearDuplicate { .. })));
    }

    #[test]
    fn min_gap_is_honoured() {
        let cfg = ConfigFile::from_json(r#"{"angles_radians": [0, 1e-9], "min_gap": 1e-12}"#).unwrap();
        assert_eq!(cfg.to_polygon().unwrap().n(), 2);
    }
}
