//! Certification, identification and superbridge analysis of polygonal
//! knots, plus a stick-number / superbridge-index bounds table.
//!
//! The pipeline starts from a [`geometry::Polygon`] read from a coordinate
//! file. [`equilateral`] checks the Millett–Rawdon criterion, [`diagram`] and
//! [`invariants`] turn a generic projection into a PD code and identify its
//! knot type by HOMFLY polynomial, and [`superbridge`] computes the exact
//! superbridge number and Gordan certificates. [`sampler`] generates random
//! confined equilateral polygons, [`bounds`] holds the per-knot bound
//! intervals, and [`render`] draws diagrams as SVG.

pub mod bounds;
pub mod diagram;
pub mod equilateral;
pub mod geometry;
pub mod invariants;
pub mod poly;
pub mod render;
pub mod sampler;
pub mod superbridge;
