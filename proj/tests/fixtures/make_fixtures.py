#!/usr/bin/env python3
# Copyright 2026 The nbdup Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the checked-in notebook fixtures and checks the planted repository
with a standalone pure-Python scorer (no dependency on the C++ code).

Run from this directory: python3 make_fixtures.py
"""

import itertools
import json
import math
import os

HERE = os.path.dirname(os.path.abspath(__file__))


def v4(cells, language="python"):
    return {
        "nbformat": 4,
        "nbformat_minor": 2,
        "metadata": {
            "kernelspec": {"name": "python3", "display_name": "Python 3", "language": language},
            "language_info": {"name": language},
        },
        "cells": cells,
    }


def code(src):
    lines = src.splitlines(keepends=True)
    return {"cell_type": "code", "metadata": {}, "execution_count": None, "outputs": [],
            "source": lines}


def markdown(text):
    return {"cell_type": "markdown", "metadata": {}, "source": [text]}


def write(path, doc):
    full = os.path.join(HERE, path)
    os.makedirs(os.path.dirname(full), exist_ok=True)
    with open(full, "w", encoding="utf-8", newline="\n") as f:
        json.dump(doc, f, indent=1, ensure_ascii=False)
        f.write("\n")


# --- planted repository -------------------------------------------------------

TYPE1 = """import pandas as pd
import numpy as np
sales = pd.read_csv('data/sales_2017.csv', parse_dates=['date'])
sales = sales.dropna(subset=['region', 'amount'])
sales['month'] = sales['date'].dt.month
monthly = sales.groupby(['region', 'month'])['amount'].sum().reset_index()
monthly = monthly.sort_values(['region', 'month'])
print(monthly.head(12))"""

# Same code with extra indentation, trailing blanks, blank lines and comments.
TYPE1_WS = """import pandas as pd   
import numpy as np
# load the raw export

    sales = pd.read_csv('data/sales_2017.csv', parse_dates=['date'])  # raw
sales = sales.dropna(subset=['region', 'amount'])
	sales['month'] = sales['date'].dt.month

monthly = sales.groupby(['region', 'month'])['amount'].sum().reset_index()
monthly = monthly.sort_values(['region', 'month'])    
print(monthly.head(12))   # peek
"""

TYPE1_WS2 = """# monthly totals per region
  import pandas as pd
  import numpy as np
  sales = pd.read_csv('data/sales_2017.csv', parse_dates=['date'])
  sales = sales.dropna(subset=['region', 'amount'])
  sales['month'] = sales['date'].dt.month
  monthly = sales.groupby(['region', 'month'])['amount'].sum().reset_index()
  monthly = monthly.sort_values(['region', 'month'])
  print(monthly.head(12))
"""

TYPE2 = """fig, ax = plt.subplots(figsize=(10, 6))
for label, group in results.groupby('model'):
    ax.plot(group['epoch'], group['val_loss'], label=label)
ax.set_xlabel('epoch')
ax.set_ylabel('validation loss')
ax.set_title('Validation loss per model')
ax.legend(loc='upper right')
plt.tight_layout()
plt.savefig('figures/val_loss.png', dpi=150)
plt.show()"""

# Identifier-only edits: ax -> axs, label -> name, group -> grp.
TYPE2_RENAMED = """fig, axs = plt.subplots(figsize=(10, 6))
for name, grp in results.groupby('model'):
    axs.plot(grp['epoch'], grp['val_loss'], label=name)
axs.set_xlabel('epoch')
axs.set_ylabel('validation loss')
axs.set_title('Validation loss per model')
axs.legend(loc='upper right')
plt.tight_layout()
plt.savefig('figures/val_loss.png', dpi=150)
plt.show()"""

TYPE3 = """from sklearn.model_selection import train_test_split
from sklearn.ensemble import RandomForestClassifier
from sklearn.metrics import accuracy_score, f1_score
X = features.drop(columns=['target'])
y = features['target']
X_train, X_test, y_train, y_test = train_test_split(X, y, test_size=0.2, random_state=42)
clf = RandomForestClassifier(n_estimators=200, max_depth=8, random_state=42)
clf.fit(X_train, y_train)
pred = clf.predict(X_test)
print('accuracy', accuracy_score(y_test, pred))"""

# One added statement.
TYPE3_EDITED = TYPE3 + "\nprint('f1', f1_score(y_test, pred, average='macro'))"

FILLER = [
    "df.head()",
    "df.describe()",
    "%matplotlib inline\nimport matplotlib.pyplot as plt",
    "import seaborn as sns\nsns.set(style='whitegrid')",
    "len(tweets)",
    "tweets = [t for t in tweets if t.get('lang') == 'en']\nprint(len(tweets))",
    "def tokenize(text):\n    words = text.lower().split()\n    return [w.strip('.,!?') for w in words if w]",
    "vocab = Counter()\nfor t in tweets:\n    vocab.update(tokenize(t['text']))\nvocab.most_common(20)",
    "with open('config.json') as fh:\n    config = json.load(fh)\nconfig['paths']",
    "corr = numeric.corr()\nsns.heatmap(corr, annot=True, fmt='.2f', cmap='coolwarm')\nplt.show()",
    "!pip install -q lightgbm",
    "import requests\nresp = requests.get(API_URL, params={'q': query, 'page': 1})\nresp.raise_for_status()\nitems = resp.json()['items']",
    "model = Sequential()\nmodel.add(Dense(64, activation='relu', input_dim=30))\nmodel.add(Dropout(0.5))\nmodel.add(Dense(1, activation='sigmoid'))\nmodel.compile(optimizer='adam', loss='binary_crossentropy', metrics=['accuracy'])",
    "history = model.fit(X_train, y_train, epochs=25, batch_size=32, validation_split=0.1, verbose=0)",
    "scores = cross_val_score(SVC(kernel='rbf', C=3.0), X, y, cv=5)\nscores.mean(), scores.std()",
    "geo = gpd.read_file('shapes/counties.shp')\ngeo = geo.to_crs(epsg=3857)\ngeo.plot(column='population', legend=True, figsize=(12, 8))",
    "x = np.linspace(0, 2 * np.pi, 400)\nplt.plot(x, np.sin(x ** 2))\nplt.title('chirp')",
    "SELECT_SQL = 'select id, name, created_at from users where active = 1'\nrows = conn.execute(SELECT_SQL).fetchall()\nusers = pd.DataFrame(rows, columns=['id', 'name', 'created_at'])",
    "class Timer:\n    def __enter__(self):\n        self.start = time.perf_counter()\n        return self\n    def __exit__(self, *exc):\n        self.elapsed = time.perf_counter() - self.start",
    "pivot = survey.pivot_table(index='country', columns='year', values='score', aggfunc='median')\npivot.style.background_gradient(axis=None)",
    "assert all(lengths > 0), 'empty documents found'",
    "lr = LinearRegression().fit(train[['sqft', 'rooms']], train['price'])\nlr.coef_, lr.intercept_\nresid = test['price'] - lr.predict(test[['sqft', 'rooms']])\nresid.hist(bins=40)",
    "for i in range(3):\n    print(i)",
]
assert len(FILLER) == 23

# notebook -> list of sources in order; the planted members are spread out.
PLANTED_LAYOUT = {
    "analysis.ipynb": [FILLER[0], TYPE1, FILLER[1], FILLER[2], TYPE2, FILLER[3], FILLER[4],
                       FILLER[5], TYPE3, FILLER[6]],
    "exploration/copy_of_analysis.ipynb": [FILLER[7], TYPE1_WS, FILLER[8], FILLER[9],
                                           FILLER[10], TYPE2_RENAMED, FILLER[11], FILLER[12],
                                           FILLER[13], FILLER[14]],
    "models/final.ipynb": [FILLER[15], FILLER[16], TYPE3_EDITED, FILLER[17], TYPE1_WS2,
                           FILLER[18], FILLER[19], FILLER[20], FILLER[21], FILLER[22]],
}


# --- standalone scorer ----------------------------------------------------------

def strip_comment(line):
    quote = None
    i = 0
    while i < len(line):
        c = line[i]
        if quote:
            if c == "\\":
                i += 1
            elif c == quote:
                quote = None
        elif c in "'\"`":
            quote = c
        elif c == "#":
            return line[:i]
        i += 1
    return line


def normalize(src):
    out = []
    for line in src.split("\n"):
        line = strip_comment(line).strip(" \t\r\f\v")
        if line:
            out.append(line)
    return "\n".join(out)


def lev(a, b):
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def term(x, lam):
    return math.log10(x) ** lam if x > 1 else 0.0


def dr(a, b):
    d = lev(a, b)
    if d == 0:
        return 0.0, 0
    den = term((len(a) + len(b)) / 2, 6) + term((a.count("\n") + b.count("\n") + 2) / 2, 8)
    return (d / den if den > 0 else math.inf), d


def check_planted():
    cells = [normalize(s) for nb in PLANTED_LAYOUT.values() for s in nb]
    assert len(cells) == 30 and all(cells)
    planted = {normalize(TYPE1), normalize(TYPE2), normalize(TYPE2_RENAMED), normalize(TYPE3),
               normalize(TYPE3_EDITED)}
    dups = []
    closest_other = math.inf
    for (i, a), (j, b) in itertools.combinations(enumerate(cells), 2):
        r, d = dr(a, b)
        if r <= 0.3:
            dups.append((i, j, d, r))
        elif a in planted and b in planted:
            closest_other = min(closest_other, r)
        else:
            closest_other = min(closest_other, r)
    for i, j, d, r in dups:
        print(f"duplicate: cells {i} & {j}  LD={d}  DR={r:.4f}")
    print(f"smallest non-duplicate DR: {closest_other:.4f}")
    assert len(dups) == 5, dups  # 3 pairs in the size-3 class + 1 + 1


def main():
    check_planted()
    for name, sources in PLANTED_LAYOUT.items():
        cells = [code(s) for s in sources]
        if name == "analysis.ipynb":
            cells.insert(3, markdown("## Monthly sales\nNotes on the export."))
        write(os.path.join("repo_planted", name), v4(cells))

    # Format fixtures.
    write("notebooks/v4_basic.ipynb",
          v4([code("import os\nprint(os.getcwd())\n"), markdown("# Title"), code("x = 1")]))
    write("notebooks/v3_legacy.ipynb", {
        "nbformat": 3,
        "nbformat_minor": 0,
        "metadata": {"name": "legacy"},
        "worksheets": [{
            "cells": [
                {"cell_type": "heading", "level": 1, "metadata": {}, "source": ["Legacy"]},
                {"cell_type": "code", "language": "python", "metadata": {}, "outputs": [],
                 "input": ["a=1\n", "b=2"]},
                {"cell_type": "markdown", "metadata": {}, "source": ["text"]},
                {"cell_type": "code", "language": "python", "metadata": {}, "outputs": [],
                 "input": "print(a + b)"},
                {"cell_type": "raw", "metadata": {}, "source": ["raw"]},
            ]
        }, {
            "cells": [
                {"cell_type": "code", "language": "python", "metadata": {}, "outputs": [],
                 "input": []},
            ]
        }],
    })
    write("notebooks/r_kernel.ipynb", {
        "nbformat": 4, "nbformat_minor": 4,
        "metadata": {"kernelspec": {"name": "ir", "display_name": "R", "language": "R"}},
        "cells": [code("library(ggplot2)  # plots\nsummary(cars)")],
    })
    write("notebooks/no_metadata.ipynb", {"nbformat": 4, "nbformat_minor": 0, "metadata": {},
                                          "cells": [code("1 + 1"), code("")]})
    os.makedirs(os.path.join(HERE, "notebooks"), exist_ok=True)
    with open(os.path.join(HERE, "notebooks", "corrupt.ipynb"), "w") as f:
        f.write('{"nbformat": 4, "cells": [ {"cell_type": "code", "source": ["x = 1"\n')

    # Repository with a corrupt notebook next to good ones.
    write("repo_mixed/good.ipynb", v4([code("a = compute(1)\nprint(a)"), code("a = compute(1)\nprint(a)")]))
    with open(os.path.join(HERE, "repo_mixed", "broken.ipynb"), "w") as f:
        f.write("this is not json")
    write("repo_mixed/nested/deeper/v3.ipynb", json.load(open(os.path.join(HERE, "notebooks/v3_legacy.ipynb"))))

    write("repo_markdown_only/readme.ipynb", v4([markdown("# Only prose"), markdown("More prose")]))
    write("repo_single_cell/one.ipynb", v4([code("print('hello')")]))


if __name__ == "__main__":
    main()
