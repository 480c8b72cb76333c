// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Fixtures shared by the integration tests.

#![allow(dead_code)]

use locdom::{Graph, VertexSet};

pub fn set(items: &[usize]) -> VertexSet {
    items.iter().copied().collect()
}

/// Base vertices `1..=5` form `S`; eight more vertices carry the traces
/// below and nothing else, so only the traces matter for `G^S`.
pub fn five_label_example() -> (Graph, VertexSet) {
    let traces: [(usize, &[usize]); 8] = [
        (0, &[1, 2, 3, 4]),
        (6, &[2, 3, 4]),
        (7, &[1, 3, 4]),
        (8, &[3, 4]),
        (9, &[1, 3]),
        (10, &[3]),
        (11, &[1, 2, 4, 5]),
        (12, &[2, 4, 5]),
    ];
    let mut edges = Vec::new();
    for (w, t) in traces {
        edges.extend(t.iter().map(|&u| (w, u)));
    }
    (Graph::new(13, &edges).unwrap(), set(&[1, 2, 3, 4, 5]))
}
