use std::collections::HashSet;

use specgraph::canon::canonical_form;
use specgraph::enumerate::{
    connected_graphs, connected_map, filter_stream, unicyclic_nonbipartite, GraphFilter,
};

#[test]
fn connected_counts_follow_known_sequence() {
    let expected = [1usize, 1, 2, 6, 21, 112, 853, 11117];
    for (i, &count) in expected.iter().enumerate() {
        assert_eq!(
            connected_graphs(i + 1).unwrap().count(),
            count,
            "n={}",
            i + 1
        );
    }
}

#[test]
fn order_nine_parallel_count() {
    let forms = connected_map(9, |g| Some(canonical_form(g).unwrap())).unwrap();
    assert_eq!(forms.len(), 261_080);
    let distinct: HashSet<_> = forms.into_iter().collect();
    assert_eq!(distinct.len(), 261_080);
}

#[test]
fn unicyclic_order_eight_matches_filtered_stream() {
    let mine: HashSet<_> = unicyclic_nonbipartite(8, None)
        .unwrap()
        .iter()
        .map(|g| canonical_form(g).unwrap())
        .collect();
    let filter = GraphFilter::new(8).nonbipartite().unicyclic();
    let reference: HashSet<_> = filter_stream(connected_graphs(8).unwrap(), &filter)
        .map(|g| canonical_form(&g).unwrap())
        .collect();
    assert_eq!(mine, reference);
}
