#!/usr/bin/env python3
"""Generates the bundled lexicons and the synthetic fixture corpus.

The fixture corpus plants exact statistics so analytics can be verified:
every book yields 6 male mentions (4 name + 2 pronoun) and 3 female
mentions (2 name + 1 pronoun), one male occupation at level 5 and one
female occupation at level 2. Regenerating is deterministic.

Usage: python3 scripts/gen_data.py   (writes into data/)
"""

import json
import os

OUT = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")

MALE_CHARS = [
    "John", "James", "William", "Henry", "George", "Edward", "Thomas",
    "Charles", "Arthur", "David", "Robert", "Richard", "Daniel", "Samuel",
    "Walter", "Frederick", "Albert", "Ernest", "Harold", "Oliver", "Peter",
    "Simon", "Philip", "Hugh", "Martin",
]
FEMALE_CHARS = [
    "Mary", "Anna", "Clara", "Diana", "Emma", "Olivia", "Sophia", "Alice",
    "Margaret", "Eleanor", "Charlotte", "Lucy", "Helen", "Edith", "Florence",
    "Beatrice", "Agnes", "Cecilia", "Dorothy", "Esther", "Flora", "Grace",
    "Hazel", "Irene", "Laura",
]
EXTRA_MALE = [
    "Michael", "Andrew", "Stephen", "Paul", "Mark", "Luke", "Matthew",
    "Anthony", "Francis", "Leonard", "Raymond", "Stanley", "Victor",
    "Vincent", "Alan", "Brian", "Colin", "Derek", "Eric", "Gerald", "Ian",
    "Keith", "Neil", "Norman", "Roger", "Alfred", "Bernard", "Cecil",
    "Clifford", "Cyril", "Edgar", "Edwin", "Geoffrey", "Gilbert", "Gordon",
    "Herbert", "Horace", "Lawrence", "Leslie", "Lionel", "Maurice", "Percy",
    "Ralph", "Reginald", "Ronald", "Sidney", "Wilfred", "Adam", "Benjamin",
    "Christopher", "Dominic", "Felix", "Gregory", "Jerome", "Joseph",
    "Julian", "Lewis", "Nathan", "Nicholas", "Patrick", "Rupert", "Sebastian",
    "Theodore", "Timothy", "Tom", "Jack", "Harry", "Sam", "Max", "Leo",
]
EXTRA_FEMALE = [
    "Elizabeth", "Catherine", "Jane", "Sarah", "Rebecca", "Rachel", "Ruth",
    "Naomi", "Miriam", "Judith", "Susan", "Joan", "Jean", "Audrey", "Barbara",
    "Brenda", "Carol", "Daphne", "Doris", "Eileen", "Enid", "Ethel", "Gladys",
    "Gwen", "Hilda", "Iris", "Ivy", "Joyce", "June", "Kathleen", "Lilian",
    "Mabel", "Marjorie", "Maud", "Mavis", "Muriel", "Nora", "Olive", "Pamela",
    "Patricia", "Pearl", "Peggy", "Phyllis", "Rita", "Sheila", "Stella",
    "Sylvia", "Thelma", "Vera", "Violet", "Winifred", "Abigail", "Amelia",
    "Caroline", "Cora", "Daisy", "Eva", "Evelyn", "Frances", "Georgina",
    "Guinevere", "Harriet", "Isabel", "Josephine", "Julia", "Lydia",
    "Matilda", "Nancy", "Penelope", "Rosalind", "Victoria",
]

MALE_OCCS = ["doctor", "surgeon", "physician", "professor", "scientist",
             "director", "architect", "judge"]
FEMALE_OCCS = ["nurse", "secretary", "waitress", "typist", "clerk",
               "seamstress"]
MALE_ADJS = ["rich", "wealthy", "proud", "brave", "strong", "wise", "bold",
             "noble"]
FEMALE_ADJS = ["beautiful", "attractive", "lovely", "charming", "elegant",
               "graceful", "gentle", "kind"]
VERBS = ["visited", "watched", "helped", "painted", "admired", "greeted",
         "crossed", "climbed", "praised", "followed"]
NOUNS = ["garden", "river", "market", "mountain", "valley", "forest",
         "harbor", "meadow", "orchard", "bridge", "castle", "village",
         "tower", "island", "shore"]

SURNAMES = [
    "Wood", "Stone", "Brooke", "Hale", "Marsh", "Frost", "Lane", "Ford",
    "Wells", "Banks", "Dale", "Holt", "Nash", "Pike", "Reed", "Shaw",
    "Tate", "Vale", "West", "York", "Birch", "Cross", "Dunn", "Flint",
    "Grant",
]


def write(name, content):
    path = os.path.join(OUT, name)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(content)
    print("wrote", path)


def gen_census():
    rows = ["name,gender,frequency"]
    for i, n in enumerate(MALE_CHARS + EXTRA_MALE):
        rows.append("%s,M,%d" % (n.lower(), 2000 - i * 3))
    for i, n in enumerate(FEMALE_CHARS + EXTRA_FEMALE):
        rows.append("%s,F,%d" % (n.lower(), 1990 - i * 3))
    write("census.csv", "\n".join(rows) + "\n")


def gen_occupations():
    rows = ["term,level"]
    level5 = MALE_OCCS + ["barrister", "chancellor", "ambassador", "admiral",
                          "bishop", "magistrate", "commissioner", "principal",
                          "dean", "consultant", "psychologist"]
    level4 = ["engineer", "lawyer", "banker", "editor", "officer", "captain",
              "manager", "inspector", "curator", "chemist", "economist",
              "historian", "novelist", "composer"]
    level3 = ["teacher", "lecturer", "journalist", "translator", "nurse matron",
              "photographer", "merchant", "bookkeeper", "pharmacist",
              "librarian", "musician", "painter", "sculptor", "actor",
              "actress", "singer", "writer", "poet"]
    level2 = FEMALE_OCCS + ["cook", "tailor", "barber", "gardener", "weaver",
                            "potter", "printer", "postman", "fisherman",
                            "shepherd", "chimney sweep", "shop assistant"]
    level1 = ["maid", "servant", "laborer", "porter", "sweeper", "beggar",
              "child bride", "child wife", "lady in waiting", "scullery maid",
              "errand boy", "farmhand"]
    for level, terms in ((5, level5), (4, level4), (3, level3), (2, level2),
                         (1, level1)):
        for t in terms:
            rows.append("%s,%d" % (t, level))
    write("occupations.csv", "\n".join(rows) + "\n")


def gen_tags():
    rows = ["word,tag"]
    determiners = ["this", "that", "these", "those", "every", "each", "either",
                   "neither", "both", "some", "any"]
    verbs = ["has", "have", "had", "do", "does", "did", "done", "can", "could",
             "will", "would", "may", "might", "must", "shall", "should",
             "went", "met", "bought", "saw", "gave", "took", "made", "said",
             "told", "came", "found", "left", "kept", "held", "brought",
             "thought", "spoke", "wrote", "sat", "stood", "ran", "sang",
             "began", "drank", "drove", "ate", "fell", "felt", "fought",
             "got", "grew", "heard", "knew", "lost", "paid", "put", "rode",
             "sent", "sold", "sought", "taught", "wore", "won", "slept",
             "read", "led", "fed", "bred", "shed", "wed", "sped", "fled"]
    others = ["of", "in", "on", "at", "to", "for", "with", "from", "by", "as",
              "and", "or", "but", "so", "if", "then", "than", "because",
              "while", "when", "where", "after", "before", "between",
              "through", "during", "above", "below", "under", "over", "into",
              "out", "up", "down", "about", "against", "near", "off", "not",
              "no", "nor", "very", "too", "also", "just", "there", "here",
              "once", "again", "now", "soon", "still", "yet", "ever", "never",
              "always", "often"]
    adjectives = (MALE_ADJS + FEMALE_ADJS +
                  ["young", "old", "tall", "dark", "fair", "happy", "sad",
                   "quiet", "calm", "fierce", "royal", "ancient", "modern",
                   "bright", "pale", "warm", "cold", "red", "green", "blue",
                   "white", "black", "great", "small", "good", "bad", "new",
                   "long", "high", "low", "poor", "cruel", "humble", "shy",
                   "clever", "honest", "loyal", "tender", "stern", "grand"])
    nouns = ["king", "queen", "evening", "morning", "wedding", "building",
             "ring", "spring", "sibling", "darling", "shilling", "pudding",
             "ceiling", "duckling", "dwelling", "painting", "feeling",
             "meeting", "bed", "hundred", "kindred", "thing", "nothing",
             "something", "everything", "anything", "string", "wing",
             "daring"]
    for w in determiners:
        rows.append("%s,determiner" % w)
    for w in verbs:
        rows.append("%s,verb" % w)
    for w in others:
        rows.append("%s,other" % w)
    for w in adjectives:
        rows.append("%s,adjective" % w)
    for w in nouns:
        rows.append("%s,noun" % w)
    write("tags.csv", "\n".join(rows) + "\n")


def gen_abbreviations():
    write("abbreviations.txt", "\n".join(
        ["dr", "mr", "mrs", "ms", "prof", "st", "rev", "jr", "sr", "vs",
         "etc", "vol", "no", "pp", "col", "gen", "capt", "lt", "sgt",
         "hon"]) + "\n")


def gen_dictionary():
    words = set()
    for pool in (MALE_OCCS, FEMALE_OCCS, MALE_ADJS, FEMALE_ADJS, VERBS,
                 NOUNS):
        words.update(pool)
    words.update(w.lower() for w in MALE_CHARS + FEMALE_CHARS)
    words.update(["he", "she", "him", "her", "his", "hers", "man", "woman",
                  "men", "women", "boy", "girl", "kings", "queens", "king",
                  "queen", "prince", "princess", "lord", "lady", "sir",
                  "madam", "husband", "wife", "mother", "father", "daughter",
                  "son", "sister", "brother", "aunt", "uncle", "child",
                  "children", "family", "house", "home", "book", "books",
                  "story", "stories", "year", "years", "day", "days", "night",
                  "time", "world", "life", "love", "war", "peace", "road",
                  "city", "town", "country", "sea", "sky", "sun", "moon",
                  "star", "tree", "flower", "bird", "horse", "dog", "cat",
                  "run", "running", "runs", "walk", "walking", "walked",
                  "talk", "talking", "talked", "work", "working", "worked",
                  "play", "playing", "played", "write", "writing", "wrote",
                  "reads", "reading", "is", "was", "are", "were", "be",
                  "been", "being", "the", "a", "an", "and", "or", "but",
                  "of", "in", "on", "at", "to", "for", "with", "from", "by",
                  "mountain", "mountains", "dogs", "dog", "fruit", "fruits",
                  "market", "markets", "went", "bought", "met", "smiled",
                  "teacher", "lecturer", "journalist", "engineer", "lawyer",
                  "maid", "servant", "cook", "gardener", "painter", "writer",
                  "singer", "dancer", "farmer", "baker", "pilot"])
    write("dictionary.txt", "\n".join(sorted(words)) + "\n")


def description(i):
    m = MALE_CHARS[i % len(MALE_CHARS)]
    f = FEMALE_CHARS[i % len(FEMALE_CHARS)]
    mocc = MALE_OCCS[i % len(MALE_OCCS)]
    focc = FEMALE_OCCS[i % len(FEMALE_OCCS)]
    madj = MALE_ADJS[i % len(MALE_ADJS)]
    fadj = FEMALE_ADJS[i % len(FEMALE_ADJS)]
    v = [VERBS[(i + k) % len(VERBS)] for k in range(5)]
    n = [NOUNS[(i + k) % len(NOUNS)] for k in range(5)]
    sentences = [
        "%s is a %s." % (m, mocc),        # male name 1, occupation level 5
        "%s is %s." % (m, madj),          # male name 2, male adjective
        "He %s the %s." % (v[0], n[0]),   # male pronoun 1
        "%s %s the %s." % (m, v[1], n[1]),  # male name 3
        "He %s the %s." % (v[2], n[2]),   # male pronoun 2
        "%s %s the %s." % (m, v[3], n[3]),  # male name 4
        "%s is a %s." % (f, focc),        # female name 1, occupation level 2
        "%s is %s." % (f, fadj),          # female name 2, female adjective
        "She %s the %s." % (v[4], n[4]),  # female pronoun 1
    ]
    return " ".join(sentences)


def gen_fixture_corpus():
    lines = []
    for i in range(50):
        year = 1969 + (i % 49)
        if i % 2 == 0:
            author = "%s %s" % (MALE_CHARS[(i * 7 + 3) % len(MALE_CHARS)],
                                SURNAMES[i % len(SURNAMES)])
        else:
            author = "%s %s" % (FEMALE_CHARS[(i * 5 + 2) % len(FEMALE_CHARS)],
                                SURNAMES[i % len(SURNAMES)])
        record = {
            "id": "bk%03d" % (i + 1),
            "title": "Fixture Novel %d" % (i + 1),
            "author": author,
            "year": year,
            "shortlisted": True,
            "winner": i % 7 == 0,
            "description": description(i),
        }
        lines.append(json.dumps(record, sort_keys=True))
    write("fixture_corpus.jsonl", "\n".join(lines) + "\n")


def gen_sample_corpus():
    records = [
        {"id": "s1", "title": "First", "author": "John Wood", "year": 1969,
         "shortlisted": True, "winner": True,
         "description": "John went to market. He bought fruits."},
        {"id": "s2", "title": "Second", "author": "Mary Stone", "year": 1980,
         "shortlisted": True, "winner": False,
         "description": "Mary is a teacher. She helped the village."},
        {"id": "s3", "title": "Third", "author": "Clara Hale", "year": 2017,
         "shortlisted": False, "winner": False,
         "description": "Anna met Clara. Anna is kind."},
    ]
    write("sample_corpus.jsonl",
          "\n".join(json.dumps(r, sort_keys=True) for r in records) + "\n")


def gen_embeddings():
    vectors = {
        "doctor": (1, 0, 1),
        "garden": (0.1, 0.1, 1),
        "he": (1, 0, 0),
        "king": (2, 0, 0),
        "nurs": (0, 1, 1),
        "queen": (0, 2, 0),
        "river": (0.1, 0.1, -1),
        "she": (0, 1, 0),
    }
    lines = ["%d %d" % (len(vectors), 3)]
    for word in sorted(vectors):
        lines.append(word + "".join(" %.6f" % c for c in vectors[word]))
    write("fixture_embeddings.txt", "\n".join(lines) + "\n")


def gen_candidates():
    write("fixture_candidates.csv", "doctor,nurs\nnurs,doctor\nking,queen\n")


def gen_debias_inputs():
    write("fixture_debias_input.txt", "John is a doctor. Mary is a nurse.\n")
    write("fixture_royal_input.txt",
          "Arthur is a king. Guinevere is a queen.\n")


def main():
    os.makedirs(OUT, exist_ok=True)
    gen_census()
    gen_occupations()
    gen_tags()
    gen_abbreviations()
    gen_dictionary()
    gen_fixture_corpus()
    gen_sample_corpus()
    gen_embeddings()
    gen_candidates()
    gen_debias_inputs()


if __name__ == "__main__":
    main()
