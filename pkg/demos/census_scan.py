"""
Scanning the four-component link census
=======================================

"""

from periodic_homfly import bundled_corpus, ingest, scan

# 544 oriented four-component links with at most 11 crossings, with stored polynomials.
corpus = ingest(bundled_corpus("census_4comp_le11"))
print(len(corpus), "records,", len(corpus.errors), "bad lines")

# Every stored polynomial is recomputed and compared before the scan reports anything.
report = scan(corpus, p=3)
print(report.table())

# Links passing both conditions, not just the second.
both = scan(corpus, p=3, select="both")
print(len(both.passing), "records pass both conditions")
