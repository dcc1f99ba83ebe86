//! graph6 decoding and encoding checked against strings written by networkx.

use kpath::graph::{parse_graph6, write_graph6};

type Case = (&'static str, &'static str, usize, &'static [(usize, usize)]);

const CASES: [Case; 9] = [
    (
        "petersen",
        "IheA@GUAo",
        10,
        &[
            (0, 1),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 6),
            (2, 3),
            (2, 7),
            (3, 4),
            (3, 8),
            (4, 9),
            (5, 7),
            (5, 8),
            (6, 8),
            (6, 9),
            (7, 9),
        ],
    ),
    ("k5", "D~{", 5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    ("c7", "FhCKG", 7, &[(0, 1), (0, 6), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]),
    ("p4", "Ch", 4, &[(0, 1), (1, 2), (2, 3)]),
    ("star5", "Esa?", 6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]),
    ("k33", "EFz_", 6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]),
    (
        "cube",
        "Gr`HOk",
        8,
        &[(0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3), (2, 6), (3, 7), (4, 5), (4, 6), (5, 7), (6, 7)],
    ),
    ("empty3", "B?", 3, &[]),
    (
        "gnm12",
        "Kf?}PJivPEiG",
        12,
        &[
            (0, 1),
            (0, 3),
            (0, 6),
            (0, 8),
            (0, 9),
            (1, 3),
            (1, 6),
            (1, 8),
            (1, 9),
            (1, 11),
            (2, 3),
            (2, 5),
            (2, 7),
            (2, 8),
            (2, 10),
            (3, 5),
            (3, 9),
            (3, 11),
            (4, 5),
            (4, 6),
            (4, 8),
            (4, 9),
            (5, 7),
            (5, 9),
            (6, 8),
            (6, 10),
            (7, 9),
            (7, 10),
            (7, 11),
            (9, 10),
        ],
    ),
];

#[test]
fn small_graphs_match() {
    for (name, g6, n, edges) in CASES {
        let g = parse_graph6(g6).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(g.n(), n, "{name}");
        assert_eq!(g.edges().collect::<Vec<_>>(), edges, "{name}");
        assert_eq!(write_graph6(&g), g6, "{name}");
    }
}

/// 70 vertices exercises the long-form size prefix.
const G70: &str = "~?@E??A@@A_????A?C??O?W?cO?@????????C??????G??????????a?C????????????????_@?????_?G???_???????COD?????uA?@?????C???G?????A????O?O?O????C?H??I?@?c??????COGAGOO?GG??g?????????A?????GO?_OCO@??A?_HA@???G???????GG???G?????C???????A??O??O????G??@G_??__?O??AGGC?AOp??????O????_????C????@O???@??K???A??@?O??Og??_A????AXC???????O?????_??????G???O?????OCA_??@?GGC???????@??????F?AC?@???C?O?C????@O??G??G????O??g?O_?_?";

#[test]
fn long_size_prefix() {
    let g = parse_graph6(G70).unwrap();
    assert_eq!((g.n(), g.m()), (70, 150));
    let mut deg: Vec<usize> = (0..70).map(|v| g.degree(v)).collect();
    deg.sort_unstable();
    assert_eq!(
        deg,
        vec![
            0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4,
            4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 7, 7, 7, 7, 7, 7, 8, 8, 8, 9, 9
        ]
    );
    assert_eq!(
        g.edges().take(12).collect::<Vec<_>>(),
        vec![(0, 9), (0, 16), (0, 25), (0, 41), (0, 62), (1, 6), (1, 8), (1, 43), (1, 60), (2, 7), (2, 37), (2, 47)]
    );
    assert_eq!(write_graph6(&g), G70);
}
