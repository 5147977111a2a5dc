//! Exact counting of the real intersections of a low-degree plane curve with a
//! sparse curve, together with the bounds that control that count.

pub mod bounds;
pub mod implicit;
pub mod intersect;
pub mod poly;
pub mod roots;
pub mod wronskian;
