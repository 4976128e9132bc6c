//! Points files: one `x y` pair per line, `#` starts a comment, blank lines
//! are skipped. Ids follow the order of the point lines.

use std::fmt;
use std::fs;
use std::path::Path;

use boxcover::Point64;

#[derive(Debug)]
pub enum ReadError {
    Io(String, std::io::Error),
    Parse { line: usize, message: String },
}

impl fmt::Display for ReadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReadError::Io(path, e) => write!(f, "cannot read {path}: {e}"),
            ReadError::Parse { line, message } => write!(f, "line {line}: {message}"),
        }
    }
}

pub fn read_points(path: &Path) -> Result<Vec<Point64>, ReadError> {
    let text = fs::read_to_string(path).map_err(|e| ReadError::Io(path.display().to_string(), e))?;
    parse_points(&text)
}

pub fn parse_points(text: &str) -> Result<Vec<Point64>, ReadError> {
    let mut points = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| ReadError::Parse {
            line: i + 1,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(format!("expected 2 numbers, found {} fields", fields.len())));
        }
        let mut xy = [0.0; 2];
        for (slot, field) in xy.iter_mut().zip(&fields) {
            let v: f64 = field
                .parse()
                .map_err(|_| err(format!("not a number: {field:?}")))?;
            if !v.is_finite() {
                return Err(err(format!("not a finite number: {field:?}")));
            }
            *slot = v;
        }
        points.push(Point64::new(xy[0], xy[1], points.len()));
    }
    Ok(points)
}

/// Shortest representation that reads back to the same `f64`.
pub fn format_points(points: &[Point64]) -> String {
    let mut out = String::new();
    for p in points {
        out.push_str(&format!("{:?} {:?}\n", p.x, p.y));
    }
    out
}
