//! Write documents as JSON and read them back.

use complementary_choice::io::{self, Document, Stamp};
use complementary_choice::{fixtures, pretop, supermod};

fn main() {
    let f = fixtures::bundle();
    let text = io::to_json(&Document::ChoiceFunction(f.clone()), None);
    print!("{text}");

    let family = Document::Family(pretop::open_sets(&f));
    let stamp = Stamp { route: "choice_function->pretopology".into(), verified: true };
    print!("{}", io::to_json(&family, Some(&stamp)));

    let (doc, _) = io::parse(&io::to_json(&Document::SetFunction(supermod::synthesize(&f).unwrap()), None)).unwrap();
    if let Document::SetFunction(u) = doc {
        assert_eq!(supermod::induce_cf(&u).unwrap(), f);
    }

    let broken = r#"{"kind": "set_function", "ground": ["a"], "values": [{"subset": ["a"], "value": "1/0"}]}"#;
    println!("{}", io::parse(broken).unwrap_err());
}
