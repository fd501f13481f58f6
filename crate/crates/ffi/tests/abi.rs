use std::ffi::{CStr, CString};
use std::ptr;

use eop_ffi::*;

fn last_error() -> String {
    let p = eop_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn graph(n: usize, edges: &[usize]) -> *mut EopGraph {
    let mut g = ptr::null_mut();
    let st = unsafe { eop_graph_new(n, edges.as_ptr(), edges.len() / 2, &mut g) };
    assert_eq!(st, EopStatus::Ok);
    g
}

#[test]
fn solve_path_and_read_witness() {
    let g = graph(4, &[0, 1, 1, 2, 2, 3]);
    unsafe {
        assert_eq!((eop_graph_vertex_count(g), eop_graph_edge_count(g)), (4, 3));
        let mut s = ptr::null_mut();
        assert_eq!(eop_solve(g, EopClass::Auto, 24, &mut s), EopStatus::Ok);
        assert_eq!(eop_solution_value(s), 2);
        assert_eq!(eop_solution_class(s), EopClass::ProperInterval);
        let k = eop_solution_witness_len(s);
        let mut buf = vec![0usize; 2 * k];
        assert_eq!(eop_solution_witness(s, buf.as_mut_ptr(), k), EopStatus::Ok);
        assert_eq!(buf, vec![0, 1, 1, 2]);
        let mut ok = false;
        assert_eq!(eop_is_eop_set(g, buf.as_ptr(), k, &mut ok), EopStatus::Ok);
        assert!(ok);
        assert_eq!(
            eop_solution_witness(s, buf.as_mut_ptr(), 1),
            EopStatus::InvalidInput
        );
        eop_solution_free(s);
        eop_graph_free(g);
    }
}

#[test]
fn classify_flags() {
    let g = graph(4, &[0, 1, 1, 2, 2, 3, 0, 3]);
    let mut flags = 99;
    unsafe {
        assert_eq!(eop_classify(g, &mut flags), EopStatus::Ok);
        assert_eq!(flags, 0);
        let k4 = graph(4, &[0, 1, 0, 2, 0, 3, 1, 2, 1, 3, 2, 3]);
        assert_eq!(eop_classify(k4, &mut flags), EopStatus::Ok);
        assert_eq!(flags, 15);
        eop_graph_free(k4);
        eop_graph_free(g);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(
            eop_graph_new(3, [0usize, 3].as_ptr(), 1, &mut g),
            EopStatus::InvalidInput
        );
        assert!(g.is_null());
        assert!(last_error().contains("out of range"));
        assert_eq!(
            eop_graph_new(3, ptr::null(), 1, &mut g),
            EopStatus::NullPointer
        );
        assert_eq!(
            eop_graph_new(3, ptr::null(), 0, ptr::null_mut()),
            EopStatus::NullPointer
        );

        let c4 = graph(4, &[0, 1, 1, 2, 2, 3, 0, 3]);
        let mut s = ptr::null_mut();
        assert_eq!(
            eop_solve(c4, EopClass::Split, 24, &mut s),
            EopStatus::NotInClass
        );
        assert!(s.is_null());
        assert_eq!(
            eop_solve(c4, EopClass::Brute, 2, &mut s),
            EopStatus::BudgetExceeded
        );
        let mut ok = true;
        assert_eq!(
            eop_is_eop_set(c4, [0usize, 2].as_ptr(), 1, &mut ok),
            EopStatus::InvalidInput
        );
        assert_eq!(
            eop_solve(ptr::null(), EopClass::Auto, 24, &mut s),
            EopStatus::NullPointer
        );

        // a successful call clears the message
        assert_eq!(eop_solve(c4, EopClass::Auto, 24, &mut s), EopStatus::Ok);
        assert!(eop_last_error_message().is_null());
        assert_eq!(eop_solution_value(s), 2);
        eop_solution_free(s);
        eop_graph_free(c4);

        eop_graph_free(ptr::null_mut());
        assert_eq!(eop_solution_value(ptr::null()), 0);
    }
}

#[test]
fn parse_text() {
    let text = CString::new("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(
            eop_graph_parse(text.as_ptr(), EopFormat::Dimacs, &mut g),
            EopStatus::Ok
        );
        assert_eq!(eop_graph_edge_count(g), 3);
        eop_graph_free(g);
        let bad = CString::new("4 1\n0 4\n").unwrap();
        assert_eq!(
            eop_graph_parse(bad.as_ptr(), EopFormat::Edgelist, &mut g),
            EopStatus::InvalidInput
        );
        assert!(last_error().starts_with("line 2"));
    }
}
