#!/usr/bin/env python3
"""Convert a subset of the SpamAssassin public corpus into a corpus manifest.

The corpus is read from the layout of the @stdlib/datasets-spam-assassin npm
package (data/<group>/<nnnnn>.<md5>.json).  Spam is labeled positive.

    npm pack @stdlib/datasets-spam-assassin && tar xzf stdlib-*.tgz
    tools/make_spam_manifest.py package/data tests/data/spamassassin.jsonl
"""
import argparse
import email
import email.policy
import html
import json
import pathlib
import re

TAG = re.compile(r"<[^>]+>")


def message_text(raw):
    msg = email.message_from_string(raw, policy=email.policy.compat32)
    parts = [msg.get("Subject", "") or ""]
    for part in msg.walk():
        ctype = part.get_content_type()
        if not ctype.startswith("text/"):
            continue
        payload = part.get_payload(decode=True)
        if payload is None:
            continue
        try:
            text = payload.decode(part.get_content_charset() or "latin-1", errors="replace")
        except LookupError:
            text = payload.decode("latin-1")
        if ctype == "text/html":
            text = html.unescape(TAG.sub(" ", text))
        parts.append(text)
    return "\n".join(parts)


def records(group_dir, label, count, max_chars):
    files = sorted(pathlib.Path(group_dir).glob("*.json"))[:count]
    for f in files:
        rec = json.loads(f.read_text(encoding="utf-8"))
        body = " ".join(message_text(rec["text"]).split())[:max_chars]
        if not body:
            body = "(empty)"
        yield {
            "id": f"{rec['group']}-{rec['id']}",
            "label": label,
            "body": body,
            "categories": [],
            "lang": "en",
        }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("data_dir")
    ap.add_argument("out")
    ap.add_argument("--spam-group", default="spam-1")
    ap.add_argument("--ham-group", default="easy-ham-1")
    ap.add_argument("--spam", type=int, default=227)
    ap.add_argument("--ham", type=int, default=371)
    ap.add_argument("--max-chars", type=int, default=3000)
    args = ap.parse_args()
    data = pathlib.Path(args.data_dir)
    with open(args.out, "w", encoding="utf-8") as out:
        for rec in records(data / args.spam_group, "positive", args.spam, args.max_chars):
            out.write(json.dumps(rec, ensure_ascii=False) + "\n")
        for rec in records(data / args.ham_group, "negative", args.ham, args.max_chars):
            out.write(json.dumps(rec, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
