"""Builds the PubTator-style fixture files from inline markup.

Markup: [surface|Type|ID1,ID2] inside title/abstract text. Offsets are
computed over title + " " + abstract in Unicode code points.
Run from this directory: python3 make_fixtures.py
"""
import os
import re

MARK = re.compile(r"\[([^\[\]|]+)\|([^\[\]|]+)\|([^\[\]|]+)\]")


def render(doc_id, title, abstract, relations=(), novelty=False, comment=None):
    plain = []
    mentions = []
    text = title + " " + abstract
    pos = 0
    out_len = 0
    for m in MARK.finditer(text):
        seg = text[pos:m.start()]
        plain.append(seg)
        out_len += len(seg)
        surface, typ, ids = m.groups()
        mentions.append((out_len, out_len + len(surface), surface, typ, ids))
        plain.append(surface)
        out_len += len(surface)
        pos = m.end()
    plain.append(text[pos:])
    full = "".join(plain)
    t_len = len(MARK.sub(lambda m: m.group(1), title))
    lines = []
    if comment:
        lines.append("# " + comment)
    lines.append(f"{doc_id}|t|{full[:t_len]}")
    lines.append(f"{doc_id}|a|{full[t_len + 1:]}")
    for s, e, surface, typ, ids in mentions:
        lines.append(f"{doc_id}\t{s}\t{e}\t{surface}\t{typ}\t{ids}")
    for rel in relations:
        cols = [doc_id, *rel]
        if novelty:
            cols.append("Novel")
        lines.append("\t".join(cols))
    return "\n".join(lines) + "\n"


def write(path, docs):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write("\n".join(docs))


FIX = "fixtures"

write(f"{FIX}/biored/input.txt", [
    render("1001",
           "[BRCA1|GeneOrGeneProduct|672] variants in [breast cancer|DiseaseOrPhenotypicFeature|D001943].",
           "The [c.68_69delAG|SequenceVariant|rs80357914] mutation of [BRCA1|GeneOrGeneProduct|672] increases the risk of "
           "[breast cancer|DiseaseOrPhenotypicFeature|D001943]. [Tamoxifen|ChemicalEntity|D013629] reduces "
           "[breast cancer|DiseaseOrPhenotypicFeature|D001943] incidence in carriers.",
           [("Positive_Correlation", "672", "D001943"),
            ("Negative_Correlation", "D013629", "D001943"),
            ("Association", "rs80357914", "D001943")],
           novelty=True),
    render("1002",
           "[Cisplatin|ChemicalEntity|D002945] toxicity in mice.",
           "[Cisplatin|ChemicalEntity|D002945] caused [renal and hepatic failure|DiseaseOrPhenotypicFeature|D051437,D017093] "
           "in [p53|GeneOrGeneProduct|7157] knockout mice. Loss of [TP53|GeneOrGeneProduct|7157] increased toxicity.",
           [("Positive_Correlation", "D002945", "D051437"),
            ("Positive_Correlation", "D002945", "D017093"),
            ("Association", "7157", "D002945")],
           novelty=True),
])

write(f"{FIX}/aimed/input.txt", [
    render("AIMed_d1",
           "Binding of [IL-2|protein|P60568] to its receptor.",
           "[IL-2|protein|P60568] binds [IL-2R alpha|protein|P01589] with high affinity. "
           "The [gamma chain|protein|P31785] is shared by other cytokine receptors.",
           [("interaction", "P60568", "P01589"),
            ("interaction", "P01589", "P31785")]),
    render("AIMed_d2",
           "Complex formation of [Grb2|protein|P62993] and [Sos1|protein|Q07889].",
           "[Grb2|protein|P62993] associates with [Sos1|protein|Q07889] in fibroblasts.",
           [("interaction", "P62993", "Q07889")]),
])

write(f"{FIX}/hprd50/input.txt", [
    render("HPRD50_d0",
           "[Cyclin D1|protein|P24385] regulation.",
           "[Cyclin D1|protein|P24385] forms a complex with [CDK4|protein|P11802]. "
           "[p27|protein|P46527] inhibits [CDK4|protein|P11802] activity.",
           [("interaction", "P24385", "P11802"),
            ("interaction", "P46527", "P11802")]),
])

write(f"{FIX}/drugprot/input.txt", [
    render("23017395",
           "[Imatinib|CHEMICAL|CHEBI:45783] targets [ABL1|Gene|25].",
           "[Imatinib|CHEMICAL|CHEBI:45783] is an inhibitor of [ABL1|Gene|25] and [KIT|Gene|3815]. "
           "[Dopamine|CHEMICAL|CHEBI:18243] is an agonist of [DRD2|Gene|1813] but not of [KIT|Gene|3815].",
           [("INHIBITOR", "CHEBI:45783", "25"),
            ("INHIBITOR", "CHEBI:45783", "3815"),
            ("AGONIST", "CHEBI:18243", "1813"),
            ("PRODUCT-OF", "CHEBI:18243", "3815")]),
    render("23017396",
           "[Ketamine|CHEMICAL|CHEBI:6121] and [GRIN1|Gene|2902].",
           "[Ketamine|CHEMICAL|CHEBI:6121] acts as an antagonist at [GRIN1|Gene|2902] receptors.",
           [("ANTAGONIST", "CHEBI:6121", "2902")]),
])

write(f"{FIX}/ddi/input.txt", [
    render("DDI-DrugBank.d1",
           "Interactions of [warfarin|DRUG|DB00682].",
           "[Aspirin|BRAND|DB00945] may increase the anticoagulant effect of [warfarin|DRUG|DB00682]. "
           "[Antacids|GROUP|G_antacid] reduce absorption of [ketoconazole|DRUG|DB01026].",
           [("effect", "DB00945", "DB00682"),
            ("mechanism", "G_antacid", "DB01026")]),
])

write(f"{FIX}/bc5cdr/input.txt", [
    render("227508",
           "[Naloxone|Chemical|D009270] reverses the antihypertensive effect of [clonidine|Chemical|D003000].",
           "In rats, [clonidine|Chemical|D003000] induced [hypotension|Disease|D007022] that was reversed by "
           "[naloxone|Chemical|D009270]. [Bradycardia|Disease|D001919] was also observed.",
           [("CID", "D003000", "D007022")]),
    render("354896",
           "[Lidocaine|Chemical|D008012]-induced cardiac asystole.",
           "Intravenous [lidocaine|Chemical|D008012] caused [asystole|Disease|D006323] in a patient.",
           [("CID", "D008012", "D006323")]),
])

# Span-less corpora: relation triples plus annotated texts without relations.
os.makedirs(f"{FIX}/emu", exist_ok=True)
with open(f"{FIX}/emu/input.txt", "w") as f:
    f.write("# pmid\tgene\tdisease\n19000001\t7157\tD002277\n19000001\t675\tD001943\n19000099\t1\tD2\n")
write(f"{FIX}/emu/annotations.txt", [
    render("19000001",
           "Mutations in [TP53|Gene|7157] and lung cancer.",
           "Somatic [TP53|Gene|7157] mutations were frequent in [carcinoma|Disease|D002277]. "
           "Germline [BRCA2|Gene|675] variants were observed in our cohort."),
])

os.makedirs(f"{FIX}/pharmgkb", exist_ok=True)
with open(f"{FIX}/pharmgkb/input.txt", "w") as f:
    f.write("PA1001\tD014859\t1565\tassociated\nPA1001\tD014859\t1559\nPA1001\tD000082\t1544\n")
write(f"{FIX}/pharmgkb/annotations.txt", [
    render("PA1001",
           "[Warfarin|Chemical|D014859] dosing and [CYP2D6|Gene|1565].",
           "[Warfarin|Chemical|D014859] clearance depends on [CYP2D6|Gene|1565] and [CYP2C9|Gene|1559] activity. "
           "Enzymes such as [CYP1A2|Gene|1544] are also discussed. "
           "[Acetaminophen|Chemical|D000082] was administered separately."),
])

os.makedirs(f"{FIX}/disgenet", exist_ok=True)
with open(f"{FIX}/disgenet/input.txt", "w") as f:
    f.write("31000001\t3569\tD001172\n31000001\t7124\tD001172\n31000001\t3569\tD003924\n")
write(f"{FIX}/disgenet/annotations.txt", [
    render("31000001",
           "Cytokines in [rheumatoid arthritis|Disease|D001172].",
           "Serum [IL6|Gene|3569] is elevated in [rheumatoid arthritis|Disease|D001172]. "
           "[TNF|Gene|7124] levels were measured. Patients with [type 2 diabetes|Disease|D003924] were excluded."),
])

# Format edge cases: comments, Unicode text, composite ids, a relation whose
# concepts have no mention, novelty column.
write("pubtator/edge_cases.txt", [
    render("E1",
           "Effects of [β-carotene|Chemical|D019207] on [Müller cells|Disease|D000001].",
           "Treatment with [β-carotene|Chemical|D019207] (5 µM) protected cells; see Fig. 2.",
           [("Association", "D019207", "D000001"),
            ("Bind", "D019207", "D999999")],
           comment="unicode and an unresolved relation"),
    render("E2",
           "[ALDH2|Gene|217] and [alcohol flush|Disease|D005483].",
           "[Ethanol|Chemical|D000431] metabolism in [ALDH2|Gene|217] deficient and [CYP2E1|Gene|1571] overexpressing cells.",
           [("Association", "217", "D005483", ), ("Bind", "D000431", "217")],
           novelty=True),
    render("E3", "Title without annotations.", "Abstract without annotations."),
])
