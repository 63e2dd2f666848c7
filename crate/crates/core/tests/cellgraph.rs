use tqft::cellgraph::*;

fn graph(rotation: &[&[usize]], edges: &[(usize, usize)]) -> CellGraph {
    let rot: Vec<Vec<usize>> = rotation.iter().map(|r| r.to_vec()).collect();
    CellGraph::from_rotation(&rot, edges).unwrap()
}

fn point() -> CellGraph {
    CellGraph::new(vec![vec![]]).unwrap()
}
fn segment() -> CellGraph {
    graph(&[&[1], &[2]], &[(1, 2)])
}
fn path3() -> CellGraph {
    graph(&[&[1], &[2, 3], &[4]], &[(1, 2), (3, 4)])
}
fn planar_loop() -> CellGraph {
    graph(&[&[1, 2]], &[(1, 2)])
}
fn two_cycle() -> CellGraph {
    graph(&[&[1, 3], &[4, 2]], &[(1, 2), (3, 4)])
}
fn torus() -> CellGraph {
    graph(&[&[1, 2, 3, 4]], &[(1, 3), (2, 4)])
}

#[test]
fn genus_and_faces() {
    let g = planar_loop();
    assert_eq!((g.genus().unwrap(), g.faces()), (0, 2));
    let t = torus();
    assert_eq!((t.genus().unwrap(), t.faces()), (1, 1));
    let s = segment();
    assert_eq!((s.genus().unwrap(), s.faces()), (0, 1));
    assert_eq!(point().genus().unwrap(), 0);
    let disjoint = point().disjoint_union(&point());
    assert!(disjoint.genus().is_err());
}

#[test]
fn eco1_examples() {
    let p = segment().eco1(0).unwrap();
    assert!(is_isomorphic(&p, &point()));
    for e in 0..2 {
        let s = path3().eco1(2 * e).unwrap();
        assert!(is_isomorphic(&s, &segment()));
        assert_eq!(s.complexity(), path3().complexity() - 1);
    }
    let theta = two_cycle().eco1(0).unwrap();
    assert_eq!(theta.num_vertices(), 1);
    assert!(theta.is_loop(0));
    assert!(is_isomorphic(&theta, &planar_loop()));
    assert!(matches!(planar_loop().eco1(0), Err(tqft::Error::WrongOperation { .. })));
}

#[test]
fn eco1_keeps_tail_label_and_splices() {
    // star: centre 1 with leaves 2 and 3
    let g = graph(&[&[1, 3], &[2], &[4]], &[(1, 2), (3, 4)]);
    let h = g.eco1(1).unwrap(); // tail is leaf 2
    assert_eq!(h.labels(), &[2, 3]);
    assert_eq!(h.degrees(), vec![1, 1]);
}

#[test]
fn eco2_examples() {
    match planar_loop().eco2(0).unwrap() {
        Eco2::Separating(a, b) => {
            assert!(is_isomorphic(&a, &point()));
            assert!(is_isomorphic(&b, &point()));
            assert_eq!((a.labels(), b.labels()), (&[1][..], &[1][..]));
        }
        other => panic!("expected a separating loop, got {other:?}"),
    }
    match torus().eco2(0).unwrap() {
        Eco2::Handle(g) => {
            assert_eq!(g.num_vertices(), 2);
            assert_eq!(g.genus().unwrap(), 0);
            assert_eq!(g.labels(), &[1, 2]);
        }
        other => panic!("expected a handle, got {other:?}"),
    }
    let after = two_cycle().eco1(0).unwrap();
    assert!(matches!(after.eco2(0).unwrap(), Eco2::Separating(..)));
    assert!(segment().eco2(0).is_err());
}

#[test]
fn eco_reduces_complexity_everywhere() {
    for mu in [vec![6], vec![2, 4], vec![3, 3], vec![1, 2, 3], vec![2, 2, 2]] {
        for g in 0..=1 {
            for gr in enumerate_arrowed(g, &mu).unwrap() {
                for d in 0..gr.num_darts() {
                    let c = gr.contract(d).unwrap();
                    assert_eq!(c.complexity(), gr.complexity() - 1);
                    assert_eq!(c.num_edges(), gr.num_edges() - 1);
                }
            }
        }
    }
}

#[test]
fn brute_force_examples() {
    assert_eq!(enumerate_arrowed(0, &[2]).unwrap().len(), 1);
    assert_eq!(enumerate_arrowed(1, &[4]).unwrap().len(), 1);
    assert_eq!(enumerate_arrowed(0, &[1, 1]).unwrap().len(), 1);
    assert_eq!(count_brute(0, &[4]).unwrap(), 2);
    assert_eq!(count_brute(0, &[6]).unwrap(), 5);
    assert_eq!(count_brute(1, &[4]).unwrap(), 1);
    assert_eq!(count_brute(0, &[0]).unwrap(), 1);
    assert_eq!(count_brute(0, &[3]).unwrap(), 0);
    assert!(matches!(count_brute(0, &[14]), Err(tqft::Error::Guard(_))));
}

#[test]
fn catalan_numbers_by_brute_force() {
    let catalan = [1, 1, 2, 5, 14, 42, 132];
    for (m, c) in catalan.iter().enumerate() {
        assert_eq!(count_brute(0, &[2 * m]).unwrap(), *c);
    }
}

#[test]
fn genus_partition_of_connected_matchings() {
    for mu in [vec![8], vec![4, 4], vec![1, 3, 2], vec![2, 2, 2, 2], vec![5, 1, 1, 1]] {
        let by_genus: u64 = (0..=3).map(|g| count_brute(g, &mu).unwrap()).sum();
        assert_eq!(by_genus, count_connected_matchings(&mu).unwrap());
    }
}

#[test]
fn enumerated_graphs_have_requested_type() {
    for g in enumerate_arrowed(1, &[3, 1, 2]).unwrap() {
        assert_eq!(g.genus().unwrap(), 1);
        assert_eq!(g.degrees(), vec![3, 1, 2]);
        assert!(g.arrows().iter().all(Option::is_some));
    }
}

#[test]
fn automorphisms() {
    assert_eq!(automorphism_order(&segment()), 1);
    assert_eq!(automorphism_order(&planar_loop()), 2);
    assert_eq!(automorphism_order(&two_cycle()), 2);
    assert_eq!(automorphism_order(&point()), 1);
    assert_eq!(automorphism_order(&torus()), 4);
}

#[test]
fn hom_set_examples() {
    let two_points = point().disjoint_union(&point()).with_labels(vec![1, 2]).unwrap();
    let cases = [
        (point(), point(), 1),
        (point(), segment(), 0),
        (path3(), segment(), 2),
        (path3(), point(), 1),
        (two_cycle(), planar_loop(), 2),
        (two_cycle(), two_points, 1),
    ];
    let sizes: Vec<usize> = cases.iter().map(|(a, b, _)| hom_set(a, b).unwrap().len()).collect();
    assert_eq!(sizes, cases.iter().map(|c| c.2).collect::<Vec<_>>());
    let hs = hom_set(&path3(), &segment()).unwrap();
    assert_eq!(hs.iter().map(|m| m.contracted.clone()).collect::<Vec<_>>(), vec![vec![0], vec![1]]);
}

#[test]
fn graph_json_round_trip() {
    let spec: GraphSpec =
        serde_json::from_str(r#"{"n":2,"rotation":[[10,30],[40,20]],"edges":[[10,20],[30,40]],"arrows":[10,null]}"#)
            .unwrap();
    let g = spec.to_graph().unwrap();
    assert!(is_isomorphic(&g, &two_cycle()));
    assert_eq!(g.arrows(), &[Some(0), None]);
    let back = GraphSpec::from_graph(&g);
    let again: GraphSpec = serde_json::from_str(&serde_json::to_string(&back).unwrap()).unwrap();
    assert_eq!(again.to_graph().unwrap(), g);
    let bad: GraphSpec = serde_json::from_str(r#"{"n":1,"rotation":[[1,2]],"edges":[[1,3]]}"#).unwrap();
    assert!(bad.to_graph().is_err());
}
