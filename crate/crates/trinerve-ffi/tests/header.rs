// The committed C header must mention every exported symbol.

#[test]
fn header_matches_surface() {
    let header = include_str!("../include/trinerve.h");
    for symbol in [
        "tn_last_error_message",
        "tn_complex_from_ssx",
        "tn_complex_to_ssx",
        "tn_string_free",
        "tn_complex_free",
        "tn_complex_trunc",
        "tn_complex_count",
        "tn_complex_check_identities",
        "tn_nerve_build",
        "tn_homology",
        "tn_kan_check",
        "tn_postnikov_verify",
    ] {
        assert!(header.contains(symbol), "header is missing {symbol}");
    }
    let source = include_str!("../src/lib.rs");
    for line in source.lines() {
        if let Some(rest) = line.trim().strip_prefix("pub unsafe extern \"C\" fn ") {
            let name = rest.split('(').next().unwrap();
            assert!(header.contains(name), "header is missing exported fn {name}");
        }
    }
}
