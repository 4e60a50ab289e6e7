//! Viennot's shadow-line picture of row insertion.
//!
//! A permutation-like word `w` becomes the points `(i, w_i)`. Jump line `j`
//! collects the points whose longest increasing run ending there has length
//! `j`; read left to right its points go strictly down, and it is drawn as
//! a staircase that drops to each point and then runs right to the next
//! one. The northeast corners `(x_{t+1}, y_t)` of all staircases form the
//! skeleton, which is the first-row bump stream seen as a point set.
//! Rebuilding lines on the skeleton gives the second row, and so on.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::YoungDiagram;
use crate::rsk::Word;

/// Integer points with pairwise distinct `x` and pairwise distinct `y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointSet {
    points: Vec<(u32, u32)>,
}

impl PointSet {
    /// Sorts by `x` and rejects repeated coordinates.
    pub fn new(mut points: Vec<(u32, u32)>) -> Result<Self> {
        points.sort_unstable();
        let mut ys: Vec<u32> = points.iter().map(|p| p.1).collect();
        ys.sort_unstable();
        let repeated_x = points.windows(2).any(|p| p[0].0 == p[1].0);
        if repeated_x || ys.windows(2).any(|y| y[0] == y[1]) {
            return Err(Error::NotDistinct(format!("{points:?}")));
        }
        Ok(Self { points })
    }

    /// The points `(i, w_i)`, positions counted from 1.
    pub fn of_word(w: &Word) -> Result<Self> {
        if !w.has_distinct_letters() {
            return Err(Error::RepeatedLetters);
        }
        Ok(Self { points: w.letters().iter().enumerate().map(|(i, &y)| (i as u32 + 1, y)).collect() })
    }

    /// Points in increasing `x`.
    pub fn points(&self) -> &[(u32, u32)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// One staircase: its points left to right and its northeast corners.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JumpLine {
    pub points: Vec<(u32, u32)>,
    pub corners: Vec<(u32, u32)>,
}

impl JumpLine {
    /// The staircase as axis-parallel segments between consecutive
    /// vertices `p_1, c_1, p_2, c_2, ..., p_m`. The unbounded rays at both
    /// ends are omitted.
    pub fn segments(&self) -> Vec<((u32, u32), (u32, u32))> {
        let mut out = Vec::new();
        for (t, &corner) in self.corners.iter().enumerate() {
            out.push((self.points[t], corner));
            out.push((corner, self.points[t + 1]));
        }
        out
    }
}

/// The white points, their jump lines in sweep order, and the skeleton.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JumpLineDiagram {
    pub points: PointSet,
    pub lines: Vec<JumpLine>,
    pub skeleton: PointSet,
}

/// Jump lines of an arbitrary point set.
pub fn build_from_points(points: &PointSet) -> JumpLineDiagram {
    // Patience sorting: line j keeps its current lowest y. A new point joins
    // the first line whose lowest y is above it; lines' lowest y values stay
    // increasing in j.
    let mut lows: Vec<u32> = Vec::new();
    let mut lines: Vec<JumpLine> = Vec::new();
    for &(x, y) in points.points() {
        let j = lows.partition_point(|&low| low < y);
        if j == lows.len() {
            lows.push(y);
            lines.push(JumpLine { points: vec![(x, y)], corners: Vec::new() });
        } else {
            let line = &mut lines[j];
            let prev_y = line.points.last().expect("nonempty line").1;
            line.corners.push((x, prev_y));
            line.points.push((x, y));
            lows[j] = y;
        }
    }
    let mut corners: Vec<(u32, u32)> = lines.iter().flat_map(|l| l.corners.iter().copied()).collect();
    corners.sort_unstable();
    JumpLineDiagram { points: points.clone(), lines, skeleton: PointSet { points: corners } }
}

/// The shadow-line diagram of a word with distinct letters.
pub fn build_diagram(w: &Word) -> Result<JumpLineDiagram> {
    Ok(build_from_points(&PointSet::of_word(w)?))
}

/// Skeleton `y` values in increasing `x`.
pub fn skeleton_word(diagram: &JumpLineDiagram) -> Word {
    Word::from_letters(diagram.skeleton.points().iter().map(|p| p.1).collect::<Vec<_>>())
}

/// Row `i` is the number of jump lines after `i − 1` skeleton passes.
pub fn iterated_shape(w: &Word) -> Result<YoungDiagram> {
    let mut points = PointSet::of_word(w)?;
    let mut rows = Vec::new();
    while !points.is_empty() {
        let diagram = build_from_points(&points);
        rows.push(diagram.lines.len());
        points = diagram.skeleton;
    }
    YoungDiagram::new(rows)
}

impl JumpLineDiagram {
    /// No two staircases touch. Each segment is axis-parallel, so two
    /// segments meet exactly when their bounding boxes intersect.
    pub fn is_non_crossing(&self) -> bool {
        let boxes: Vec<Vec<[u32; 4]>> = self
            .lines
            .iter()
            .map(|l| {
                let mut segs: Vec<[u32; 4]> = l
                    .segments()
                    .into_iter()
                    .map(|(a, b)| [a.0.min(b.0), a.0.max(b.0), a.1.min(b.1), a.1.max(b.1)])
                    .collect();
                // A line with one point is a single vertex.
                if segs.is_empty() {
                    let (x, y) = l.points[0];
                    segs.push([x, x, y, y]);
                }
                segs
            })
            .collect();
        let meets = |a: &[u32; 4], b: &[u32; 4]| a[0] <= b[1] && b[0] <= a[1] && a[2] <= b[3] && b[2] <= a[3];
        for i in 0..boxes.len() {
            for j in i + 1..boxes.len() {
                if boxes[i].iter().any(|a| boxes[j].iter().any(|b| meets(a, b))) {
                    return false;
                }
            }
        }
        true
    }

    /// A text grid with `y` increasing upward: `o` for points, `*` for
    /// skeleton corners, digits (mod 10) for the line each point is on.
    pub fn to_grid(&self) -> String {
        let width = self.points.points().iter().map(|p| p.0).max().unwrap_or(0) as usize;
        let height = self.points.points().iter().map(|p| p.1).max().unwrap_or(0) as usize;
        let mut grid = vec![vec!['.'; width]; height];
        for (j, line) in self.lines.iter().enumerate() {
            let mark = char::from_digit((j as u32 + 1) % 10, 10).expect("digit");
            for &(x, y) in &line.points {
                grid[y as usize - 1][x as usize - 1] = mark;
            }
        }
        for &(x, y) in self.skeleton.points() {
            grid[y as usize - 1][x as usize - 1] = '*';
        }
        let mut out = String::new();
        for row in grid.iter().rev() {
            out.extend(row.iter());
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rsk::{bump_stream, sh_rsk};

    fn w(s: &[u32]) -> Word {
        Word::from_letters(s.to_vec())
    }

    #[test]
    fn small_examples() {
        let d = build_diagram(&w(&[1, 2, 3])).unwrap();
        assert_eq!(d.lines.len(), 3);
        assert!(d.skeleton.is_empty());

        let d = build_diagram(&w(&[3, 2, 1])).unwrap();
        assert_eq!(d.lines.len(), 1);
        assert_eq!(d.skeleton.points(), &[(2, 3), (3, 2)]);

        let d = build_diagram(&w(&[1, 3, 2])).unwrap();
        assert_eq!(d.lines.len(), 2);
        assert_eq!(d.skeleton.points(), &[(3, 3)]);
        assert_eq!(skeleton_word(&d).letters(), &[3]);
        assert!(d.is_non_crossing());
    }

    #[test]
    fn repeated_letters_are_rejected() {
        assert!(matches!(build_diagram(&w(&[1, 1])), Err(Error::RepeatedLetters)));
        assert!(PointSet::new(vec![(1, 2), (2, 2)]).is_err());
    }

    #[test]
    fn shapes() {
        assert_eq!(iterated_shape(&w(&[2, 1])).unwrap().rows(), &[1, 1]);
        assert_eq!(iterated_shape(&w(&[1, 2, 3, 4])).unwrap().rows(), &[4]);
        assert_eq!(iterated_shape(&Word::new(vec![], 0).unwrap()).unwrap().rows(), &[] as &[usize]);
    }

    #[test]
    fn agrees_with_insertion_on_a_sample() {
        let x = w(&[4, 7, 1, 6, 3, 2, 8, 5]);
        let d = build_diagram(&x).unwrap();
        assert_eq!(skeleton_word(&d).letters(), bump_stream(&x, 1).letters());
        assert_eq!(iterated_shape(&x).unwrap(), sh_rsk(&x));
        assert!(d.is_non_crossing());
    }

    #[test]
    fn grid_rendering() {
        let d = build_diagram(&w(&[1, 3, 2])).unwrap();
        assert_eq!(d.to_grid(), ".2*\n..2\n1..\n");
    }
}
