#pragma once

// Embedded training text for the byte-level language-modeling task: original
// template-composed prose, fixed at build time so runs need no network or
// external files. Byte values map directly to token ids.

#include <string>
#include <string_view>

namespace mgrow {
namespace corpus_detail {

inline constexpr const char* kPart0 = R"corpus(chapter 1

The gardener rose before the light and walked the boundary path in early
spring. There was a row of seedlings waiting, and it would not wait kindly.
She had learned that patience is a kind of work, so the first hour went to
looking rather than doing. By dusk the work had a shape that could be trusted.

At midsummer, the gardener took stock of two sacks of barley. An old habit
said hurry, and an older one said check the joints. She trusted the older
habit, having learned that weather forgives no schedule. Nothing spectacular
happened, which was the point.

It was said in the village that the gardener never hurried and never stalled.
After the first frost this was tested by a bolt pattern of plain cloth. She
sharpened what needed sharpening and oiled the rest, remembering that borrowed
strength must be returned with interest. The account closed even, and the lamp
went out early.

The gardener kept one rule above the bench: name the problem before touching
it. During the long rains, faced with a flock worn thin by March, she kept a
narrow ledger of what went out and what came back. Those watching learned that
the village remembers quality longer than speed. What remained undone was
written down without shame.

chapter 2

At midsummer, the carpenter took stock of a bundle of oak planks. An old habit
said hurry, and an older one said check the joints. He trusted the older
habit, having learned that most errors announce themselves twice before they
cost anything. Nothing spectacular happened, which was the point.

It was said in the village that the carpenter never hurried and never stalled.
After the first frost this was tested by a frame heavy with honey. He kept a
narrow ledger of what went out and what came back, remembering that small
daily measures beat rare heroic ones. The account closed even, and the lamp
went out early.

The carpenter kept one rule above the bench: name the problem before touching
it. During the long rains, faced with a kiln of thin-walled jars, he taught an
apprentice by letting the mistake almost happen. Those watching learned that
the second attempt should be smaller than the first. What remained undone was
written down without shame.

The carpenter traded an hour of talk for a week of goodwill before the
harvest. There was a course of river stone waiting, and it would not wait
kindly. He had learned that patience is a kind of work, so the first hour went
to looking rather than doing. It was enough, and enough was the whole craft.

chapter 3

It was said in the village that the miller never hurried and never stalled.
After the first frost this was tested by two sacks of barley. She taught an
apprentice by letting the mistake almost happen, remembering that a tool kept
clean is a tool half mastered. The account closed even, and the lamp went out
early.

The miller kept one rule above the bench: name the problem before touching it.
During the long rains, faced with a bolt pattern of plain cloth, she traded an
hour of talk for a week of goodwill. Those watching learned that what is
counted honestly can be improved honestly. What remained undone was written
down without shame.

The miller measured twice against the old brass rule before the harvest. There
was a flock worn thin by March waiting, and it would not wait kindly. She had
learned that good seams are invisible until they fail, so the first hour went
to looking rather than doing. It was enough, and enough was the whole craft.

Under the winter stars, the miller took stock of a pot of slow broth. An old
habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that most errors announce themselves twice before
they cost anything. The day ended the way well-planned days end, quietly.

chapter 4

The beekeeper kept one rule above the bench: name the problem before touching
it. During the long rains, faced with a frame heavy with honey, he measured
twice against the old brass rule. Those watching learned that weather forgives
no schedule. What remained undone was written down without shame.

The beekeeper set aside a tenth part for the lean month before the harvest.
There was a kiln of thin-walled jars waiting, and it would not wait kindly. He
had learned that borrowed strength must be returned with interest, so the
first hour went to looking rather than doing. It was enough, and enough was
the whole craft.

Under the winter stars, the beekeeper took stock of a course of river stone.
An old habit said hurry, and an older one said check the joints. He trusted
the older habit, having learned that the village remembers quality longer than
speed. The day ended the way well-planned days end, quietly.

It was said in the village that the beekeeper never hurried and never stalled.
In early spring this was tested by a rope for the far landing. He watched the
sky and changed nothing yet, remembering that a tool kept clean is a tool half
mastered. By dusk the work had a shape that could be trusted.

chapter 5

The weaver mended the smallest break first before the harvest. There was a
bolt pattern of plain cloth waiting, and it would not wait kindly. She had
learned that small daily measures beat rare heroic ones, so the first hour
went to looking rather than doing. It was enough, and enough was the whole
craft.

Under the winter stars, the weaver took stock of a flock worn thin by March.
An old habit said hurry, and an older one said check the joints. She trusted
the older habit, having learned that the second attempt should be smaller than
the first. The day ended the way well-planned days end, quietly.

It was said in the village that the weaver never hurried and never stalled. In
early spring this was tested by a pot of slow broth. She rose before the light
and walked the boundary path, remembering that patience is a kind of work. By
dusk the work had a shape that could be trusted.

The weaver kept one rule above the bench: name the problem before touching it.
At midsummer, faced with a row of seedlings, she sorted the day's tasks from
heaviest to lightest. Those watching learned that weather forgives no
schedule. Nothing spectacular happened, which was the point.

chapter 6

Under the winter stars, the potter took stock of a kiln of thin-walled jars.
An old habit said hurry, and an older one said check the joints. He trusted
the older habit, having learned that what is counted honestly can be improved
honestly. The day ended the way well-planned days end, quietly.

It was said in the village that the potter never hurried and never stalled. In
early spring this was tested by a course of river stone. He sorted the day's
tasks from heaviest to lightest, remembering that good seams are invisible
until they fail. By dusk the work had a shape that could be trusted.

The potter kept one rule above the bench: name the problem before touching it.
At midsummer, faced with a rope for the far landing, he sharpened what needed
sharpening and oiled the rest. Those watching learned that most errors
announce themselves twice before they cost anything. Nothing spectacular
happened, which was the point.

The potter kept a narrow ledger of what went out and what came back after the
first frost. There was a bundle of oak planks waiting, and it would not wait
kindly. He had learned that small daily measures beat rare heroic ones, so the
first hour went to looking rather than doing. The account closed even, and the
lamp went out early.

chapter 7

It was said in the village that the shepherd never hurried and never stalled.
In early spring this was tested by a flock worn thin by March. She sharpened
what needed sharpening and oiled the rest, remembering that borrowed strength
must be returned with interest. By dusk the work had a shape that could be
trusted.

The shepherd kept one rule above the bench: name the problem before touching
it. At midsummer, faced with a pot of slow broth, she kept a narrow ledger of
what went out and what came back. Those watching learned that the village
remembers quality longer than speed. Nothing spectacular happened, which was
the point.

The shepherd taught an apprentice by letting the mistake almost happen after
the first frost. There was a row of seedlings waiting, and it would not wait
kindly. She had learned that a tool kept clean is a tool half mastered, so the
first hour went to looking rather than doing. The account closed even, and the
lamp went out early.

During the long rains, the shepherd took stock of two sacks of barley. An old
habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that what is counted honestly can be improved
honestly. What remained undone was written down without shame.

chapter 8

The mason kept one rule above the bench: name the problem before touching it.
At midsummer, faced with a course of river stone, he taught an apprentice by
letting the mistake almost happen. Those watching learned that the second
attempt should be smaller than the first. Nothing spectacular happened, which
was the point.

The mason traded an hour of talk for a week of goodwill after the first frost.
There was a rope for the far landing waiting, and it would not wait kindly. He
had learned that patience is a kind of work, so the first hour went to looking
rather than doing. The account closed even, and the lamp went out early.

During the long rains, the mason took stock of a bundle of oak planks. An old
habit said hurry, and an older one said check the joints. He trusted the older
habit, having learned that weather forgives no schedule. What remained undone
was written down without shame.

It was said in the village that the mason never hurried and never stalled.
Before the harvest this was tested by a frame heavy with honey. He set aside a
tenth part for the lean month, remembering that borrowed strength must be
returned with interest. It was enough, and enough was the whole craft.

chapter 9

The cook measured twice against the old brass rule after the first frost.
There was a pot of slow broth waiting, and it would not wait kindly. She had
learned that good seams are invisible until they fail, so the first hour went
to looking rather than doing. The account closed even, and the lamp went out
early.

During the long rains, the cook took stock of a row of seedlings. An old habit
said hurry, and an older one said check the joints. She trusted the older
habit, having learned that most errors announce themselves twice before they
cost anything. What remained undone was written down without shame.

It was said in the village that the cook never hurried and never stalled.
Before the harvest this was tested by two sacks of barley. She mended the
smallest break first, remembering that small daily measures beat rare heroic
ones. It was enough, and enough was the whole craft.

The cook kept one rule above the bench: name the problem before touching it.
Under the winter stars, faced with a bolt pattern of plain cloth, she watched
the sky and changed nothing yet. Those watching learned that the second
attempt should be smaller than the first. The day ended the way well-planned
days end, quietly.

chapter 10

During the long rains, the ferryman took stock of a rope for the far landing.
An old habit said hurry, and an older one said check the joints. He trusted
the older habit, having learned that the village remembers quality longer than
speed. What remained undone was written down without shame.

It was said in the village that the ferryman never hurried and never stalled.
Before the harvest this was tested by a bundle of oak planks. He watched the
sky and changed nothing yet, remembering that a tool kept clean is a tool half
mastered. It was enough, and enough was the whole craft.

The ferryman kept one rule above the bench: name the problem before touching
it. Under the winter stars, faced with a frame heavy with honey, he rose
before the light and walked the boundary path. Those watching learned that
what is counted honestly can be improved honestly. The day ended the way well-
planned days end, quietly.

The ferryman sorted the day's tasks from heaviest to lightest in early spring.
There was a kiln of thin-walled jars waiting, and it would not wait kindly. He
had learned that good seams are invisible until they fail, so the first hour
went to looking rather than doing. By dusk the work had a shape that could be
trusted.

chapter 11

During the long rains, the gardener took stock of a bundle of oak planks. An
old habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that a tool kept clean is a tool half mastered.
The day ended the way well-planned days end, quietly.

It was said in the village that the gardener never hurried and never stalled.
Before the harvest this was tested by a frame heavy with honey. She sharpened
what needed sharpening and oiled the rest, remembering that what is counted
honestly can be improved honestly. By dusk the work had a shape that could be
trusted.

The gardener kept one rule above the bench: name the problem before touching
it. Under the winter stars, faced with a kiln of thin-walled jars, she kept a
narrow ledger of what went out and what came back. Those watching learned that
good seams are invisible until they fail. Nothing spectacular happened, which
was the point.

The gardener taught an apprentice by letting the mistake almost happen in
early spring. There was a course of river stone waiting, and it would not wait
kindly. She had learned that most errors announce themselves twice before they
cost anything, so the first hour went to looking rather than doing. The
account closed even, and the lamp went out early.

chapter 12

It was said in the village that the carpenter never hurried and never stalled.
Before the harvest this was tested by two sacks of barley. He kept a narrow
ledger of what went out and what came back, remembering that weather forgives
no schedule. By dusk the work had a shape that could be trusted.

The carpenter kept one rule above the bench: name the problem before touching
it. Under the winter stars, faced with a bolt pattern of plain cloth, he
taught an apprentice by letting the mistake almost happen. Those watching
learned that borrowed strength must be returned with interest. Nothing
spectacular happened, which was the point.

The carpenter traded an hour of talk for a week of goodwill in early spring.
There was a flock worn thin by March waiting, and it would not wait kindly. He
had learned that the village remembers quality longer than speed, so the first
hour went to looking rather than doing. The account closed even, and the lamp
went out early.

At midsummer, the carpenter took stock of a pot of slow broth. An old habit
said hurry, and an older one said check the joints. He trusted the older
habit, having learned that a tool kept clean is a tool half mastered. What
remained undone was written down without shame.

chapter 13

The miller kept one rule above the bench: name the problem before touching it.
Under the winter stars, faced with a frame heavy with honey, she traded an
hour of talk for a week of goodwill. Those watching learned that small daily
measures beat rare heroic ones. Nothing spectacular happened, which was the
point.

The miller measured twice against the old brass rule in early spring. There
was a kiln of thin-walled jars waiting, and it would not wait kindly. She had
learned that the second attempt should be smaller than the first, so the first
hour went to looking rather than doing. The account closed even, and the lamp
went out early.

At midsummer, the miller took stock of a course of river stone. An old habit
said hurry, and an older one said check the joints. She trusted the older
habit, having learned that patience is a kind of work. What remained undone
was written down without shame.

It was said in the village that the miller never hurried and never stalled.
After the first frost this was tested by a rope for the far landing. She
mended the smallest break first, remembering that weather forgives no
schedule. It was enough, and enough was the whole craft.

chapter 14

The beekeeper set aside a tenth part for the lean month in early spring. There
was a bolt pattern of plain cloth waiting, and it would not wait kindly. He
had learned that what is counted honestly can be improved honestly, so the
first hour went to looking rather than doing. The account closed even, and the
lamp went out early.

At midsummer, the beekeeper took stock of a flock worn thin by March. An old
habit said hurry, and an older one said check the joints. He trusted the older
habit, having learned that good seams are invisible until they fail. What
remained undone was written down without shame.

It was said in the village that the beekeeper never hurried and never stalled.
After the first frost this was tested by a pot of slow broth. He watched the
sky and changed nothing yet, remembering that most errors announce themselves
twice before they cost anything. It was enough, and enough was the whole
craft.

The beekeeper kept one rule above the bench: name the problem before touching
it. During the long rains, faced with a row of seedlings, he rose before the
light and walked the boundary path. Those watching learned that small daily
measures beat rare heroic ones. The day ended the way well-planned days end,
quietly.

chapter 15

At midsummer, the weaver took stock of a kiln of thin-walled jars. An old
habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that borrowed strength must be returned with
interest. What remained undone was written down without shame.

It was said in the village that the weaver never hurried and never stalled.
After the first frost this was tested by a course of river stone. She rose
before the light and walked the boundary path, remembering that the village
remembers quality longer than speed. It was enough, and enough was the whole
craft.

The weaver kept one rule above the bench: name the problem before touching it.
During the long rains, faced with a rope for the far landing, she sorted the
day's tasks from heaviest to lightest. Those watching learned that a tool kept
clean is a tool half mastered. The day ended the way well-planned days end,
quietly.

The weaver sharpened what needed sharpening and oiled the rest before the
harvest. There was a bundle of oak planks waiting, and it would not wait
kindly. She had learned that what is counted honestly can be improved
honestly, so the first hour went to looking rather than doing. By dusk the
work had a shape that could be trusted.

chapter 16

It was said in the village that the potter never hurried and never stalled.
After the first frost this was tested by a flock worn thin by March. He sorted
the day's tasks from heaviest to lightest, remembering that the second attempt
should be smaller than the first. It was enough, and enough was the whole
craft.

The potter kept one rule above the bench: name the problem before touching it.
During the long rains, faced with a pot of slow broth, he sharpened what
needed sharpening and oiled the rest. Those watching learned that patience is
a kind of work. The day ended the way well-planned days end, quietly.

The potter kept a narrow ledger of what went out and what came back before the
harvest. There was a row of seedlings waiting, and it would not wait kindly.
He had learned that weather forgives no schedule, so the first hour went to
looking rather than doing. By dusk the work had a shape that could be trusted.

Under the winter stars, the potter took stock of two sacks of barley. An old
habit said hurry, and an older one said check the joints. He trusted the older
habit, having learned that borrowed strength must be returned with interest.
Nothing spectacular happened, which was the point.

chapter 17

The shepherd kept one rule above the bench: name the problem before touching
it. During the long rains, faced with a course of river stone, she kept a
narrow ledger of what went out and what came back. Those watching learned that
good seams are invisible until they fail. The day ended the way well-planned
days end, quietly.

The shepherd taught an apprentice by letting the mistake almost happen before
the harvest. There was a rope for the far landing waiting, and it would not
wait kindly. She had learned that most errors announce themselves twice before
they cost anything, so the first hour went to looking rather than doing. By
dusk the work had a shape that could be trusted.

Under the winter stars, the shepherd took stock of a bundle of oak planks. An
old habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that small daily measures beat rare heroic ones.
Nothing spectacular happened, which was the point.

It was said in the village that the shepherd never hurried and never stalled.
In early spring this was tested by a frame heavy with honey. She measured
twice against the old brass rule, remembering that the second attempt should
be smaller than the first. The account closed even, and the lamp went out
early.

chapter 18

The mason traded an hour of talk for a week of goodwill before the harvest.
There was a pot of slow broth waiting, and it would not wait kindly. He had
learned that the village remembers quality longer than speed, so the first
hour went to looking rather than doing. By dusk the work had a shape that
could be trusted.

Under the winter stars, the mason took stock of a row of seedlings. An old
habit said hurry, and an older one said check the joints. He trusted the older
habit, having learned that a tool kept clean is a tool half mastered. Nothing
spectacular happened, which was the point.

It was said in the village that the mason never hurried and never stalled. In
early spring this was tested by two sacks of barley. He set aside a tenth part
for the lean month, remembering that what is counted honestly can be improved
honestly. The account closed even, and the lamp went out early.

The mason kept one rule above the bench: name the problem before touching it.
At midsummer, faced with a bolt pattern of plain cloth, he mended the smallest
break first. Those watching learned that good seams are invisible until they
fail. What remained undone was written down without shame.

chapter 19

Under the winter stars, the cook took stock of a rope for the far landing. An
old habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that patience is a kind of work. Nothing
spectacular happened, which was the point.

It was said in the village that the cook never hurried and never stalled. In
early spring this was tested by a bundle of oak planks. She mended the
smallest break first, remembering that weather forgives no schedule. The
account closed even, and the lamp went out early.

The cook kept one rule above the bench: name the problem before touching it.
At midsummer, faced with a frame heavy with honey, she watched the sky and
changed nothing yet. Those watching learned that borrowed strength must be
returned with interest. What remained undone was written down without shame.

The cook rose before the light and walked the boundary path after the first
frost. There was a kiln of thin-walled jars waiting, and it would not wait
kindly. She had learned that the village remembers quality longer than speed,
so the first hour went to looking rather than doing. It was enough, and enough
was the whole craft.

chapter 20

It was said in the village that the ferryman never hurried and never stalled.
In early spring this was tested by a row of seedlings. He watched the sky and
changed nothing yet, remembering that most errors announce themselves twice
before they cost anything. The account closed even, and the lamp went out
early.

The ferryman kept one rule above the bench: name the problem before touching
it. At midsummer, faced with two sacks of barley, he rose before the light and
walked the boundary path. Those watching learned that small daily measures
beat rare heroic ones. What remained undone was written down without shame.

The ferryman sorted the day's tasks from heaviest to lightest after the first
frost. There was a bolt pattern of plain cloth waiting, and it would not wait
kindly. He had learned that the second attempt should be smaller than the
first, so the first hour went to looking rather than doing. It was enough, and
enough was the whole craft.

During the long rains, the ferryman took stock of a flock worn thin by March.
An old habit said hurry, and an older one said check the joints. He trusted
the older habit, having learned that patience is a kind of work. The day ended
the way well-planned days end, quietly.

chapter 21

It was said in the village that the gardener never hurried and never stalled.
In early spring this was tested by two sacks of barley. She sharpened what
needed sharpening and oiled the rest, remembering that small daily measures
beat rare heroic ones. It was enough, and enough was the whole craft.

The gardener kept one rule above the bench: name the problem before touching
it. At midsummer, faced with a bolt pattern of plain cloth, she kept a narrow
ledger of what went out and what came back. Those watching learned that the
second attempt should be smaller than the first. The day ended the way well-
planned days end, quietly.

The gardener taught an apprentice by letting the mistake almost happen after
the first frost. There was a flock worn thin by March waiting, and it would
not wait kindly. She had learned that patience is a kind of work, so the first
hour went to looking rather than doing. By dusk the work had a shape that
could be trusted.

During the long rains, the gardener took stock of a pot of slow broth. An old
habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that weather forgives no schedule. Nothing
spectacular happened, which was the point.

chapter 22

The carpenter kept one rule above the bench: name the problem before touching
it. At midsummer, faced with a frame heavy with honey, he taught an apprentice
by letting the mistake almost happen. Those watching learned that what is
counted honestly can be improved honestly. The day ended the way well-planned
days end, quietly.

The carpenter traded an hour of talk for a week of goodwill after the first
frost. There was a kiln of thin-walled jars waiting, and it would not wait
kindly. He had learned that good seams are invisible until they fail, so the
first hour went to looking rather than doing. By dusk the work had a shape
that could be trusted.

During the long rains, the carpenter took stock of a course of river stone. An
old habit said hurry, and an older one said check the joints. He trusted the
older habit, having learned that most errors announce themselves twice before
they cost anything. Nothing spectacular happened, which was the point.

It was said in the village that the carpenter never hurried and never stalled.
Before the harvest this was tested by a rope for the far landing. He set aside
a tenth part for the lean month, remembering that small daily measures beat
rare heroic ones. The account closed even, and the lamp went out early.

chapter 23

The miller measured twice against the old brass rule after the first frost.
There was a bolt pattern of plain cloth waiting, and it would not wait kindly.
She had learned that borrowed strength must be returned with interest, so the
first hour went to looking rather than doing. By dusk the work had a shape
that could be trusted.

During the long rains, the miller took stock of a flock worn thin by March. An
old habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that the village remembers quality longer than
speed. Nothing spectacular happened, which was the point.

It was said in the village that the miller never hurried and never stalled.
Before the harvest this was tested by a pot of slow broth. She mended the
smallest break first, remembering that a tool kept clean is a tool half
mastered. The account closed even, and the lamp went out early.

The miller kept one rule above the bench: name the problem before touching it.
Under the winter stars, faced with a row of seedlings, she watched the sky and
changed nothing yet. Those watching learned that what is counted honestly can
be improved honestly. What remained undone was written down without shame.

chapter 24

During the long rains, the beekeeper took stock of a kiln of thin-walled jars.
An old habit said hurry, and an older one said check the joints. He trusted
the older habit, having learned that the second attempt should be smaller than
the first. Nothing spectacular happened, which was the point.

It was said in the village that the beekeeper never hurried and never stalled.
Before the harvest this was tested by a course of river stone. He watched the
sky and changed nothing yet, remembering that patience is a kind of work. The
account closed even, and the lamp went out early.

The beekeeper kept one rule above the bench: name the problem before touching
it. Under the winter stars, faced with a rope for the far landing, he rose
before the light and walked the boundary path. Those watching learned that
weather forgives no schedule. What remained undone was written down without
shame.

The beekeeper sorted the day's tasks from heaviest to lightest in early
spring. There was a bundle of oak planks waiting, and it would not wait
kindly. He had learned that borrowed strength must be returned with interest,
so the first hour went to looking rather than doing. It was enough, and enough
was the whole craft.

chapter 25

It was said in the village that the weaver never hurried and never stalled.
Before the harvest this was tested by a flock worn thin by March. She rose
before the light and walked the boundary path, remembering that good seams are
invisible until they fail. The account closed even, and the lamp went out
early.

The weaver kept one rule above the bench: name the problem before touching it.
Under the winter stars, faced with a pot of slow broth, she sorted the day's
tasks from heaviest to lightest. Those watching learned that most errors
announce themselves twice before they cost anything. What remained undone was
written down without shame.

The weaver sharpened what needed sharpening and oiled the rest in early
spring. There was a row of seedlings waiting, and it would not wait kindly.
She had learned that small daily measures beat rare heroic ones, so the first
hour went to looking rather than doing. It was enough, and enough was the
whole craft.

At midsummer, the weaver took stock of two sacks of barley. An old habit said
hurry, and an older one said check the joints. She trusted the older habit,
having learned that the second attempt should be smaller than the first. The
day ended the way well-planned days end, quietly.

chapter 26

The potter kept one rule above the bench: name the problem before touching it.
Under the winter stars, faced with a course of river stone, he sharpened what
needed sharpening and oiled the rest. Those watching learned that the village
remembers quality longer than speed. What remained undone was written down
without shame.

The potter kept a narrow ledger of what went out and what came back in early
spring. There was a rope for the far landing waiting, and it would not wait
kindly. He had learned that a tool kept clean is a tool half mastered, so the
first hour went to looking rather than doing. It was enough, and enough was
the whole craft.

At midsummer, the potter took stock of a bundle of oak planks. An old habit
said hurry, and an older one said check the joints. He trusted the older
habit, having learned that what is counted honestly can be improved honestly.
The day ended the way well-planned days end, quietly.

It was said in the village that the potter never hurried and never stalled.
After the first frost this was tested by a frame heavy with honey. He traded
an hour of talk for a week of goodwill, remembering that good seams are
invisible until they fail. By dusk the work had a shape that could be trusted.

chapter 27

The shepherd taught an apprentice by letting the mistake almost happen in
early spring. There was a pot of slow broth waiting, and it would not wait
kindly. She had learned that patience is a kind of work, so the first hour
went to looking rather than doing. It was enough, and enough was the whole
craft.

At midsummer, the shepherd took stock of a row of seedlings. An old habit said
hurry, and an older one said check the joints. She trusted the older habit,
having learned that weather forgives no schedule. The day ended the way well-
planned days end, quietly.

It was said in the village that the shepherd never hurried and never stalled.
After the first frost this was tested by two sacks of barley. She measured
twice against the old brass rule, remembering that borrowed strength must be
returned with interest. By dusk the work had a shape that could be trusted.

The shepherd kept one rule above the bench: name the problem before touching
it. During the long rains, faced with a bolt pattern of plain cloth, she set
aside a tenth part for the lean month. Those watching learned that the village
remembers quality longer than speed. Nothing spectacular happened, which was
the point.

chapter 28

At midsummer, the mason took stock of a rope for the far landing. An old habit
said hurry, and an older one said check the joints. He trusted the older
habit, having learned that most errors announce themselves twice before they
cost anything. The day ended the way well-planned days end, quietly.

It was said in the village that the mason never hurried and never stalled.
After the first frost this was tested by a bundle of oak planks. He set aside
a tenth part for the lean month, remembering that small daily measures beat
rare heroic ones. By dusk the work had a shape that could be trusted.

The mason kept one rule above the bench: name the problem before touching it.
During the long rains, faced with a frame heavy with honey, he mended the
smallest break first. Those watching learned that the second attempt should be
smaller than the first. Nothing spectacular happened, which was the point.

The mason watched the sky and changed nothing yet before the harvest. There
was a kiln of thin-walled jars waiting, and it would not wait kindly. He had
learned that patience is a kind of work, so the first hour went to looking
rather than doing. The account closed even, and the lamp went out early.

chapter 29

It was said in the village that the cook never hurried and never stalled.
After the first frost this was tested by a row of seedlings. She mended the
smallest break first, remembering that a tool kept clean is a tool half
mastered. By dusk the work had a shape that could be trusted.

The cook kept one rule above the bench: name the problem before touching it.
During the long rains, faced with two sacks of barley, she watched the sky and
changed nothing yet. Those watching learned that what is counted honestly can
be improved honestly. Nothing spectacular happened, which was the point.

The cook rose before the light and walked the boundary path before the
harvest. There was a bolt pattern of plain cloth waiting, and it would not
wait kindly. She had learned that good seams are invisible until they fail, so
the first hour went to looking rather than doing. The account closed even, and
the lamp went out early.

Under the winter stars, the cook took stock of a flock worn thin by March. An
old habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that most errors announce themselves twice before
they cost anything. What remained undone was written down without shame.

chapter 30

The ferryman kept one rule above the bench: name the problem before touching
it. During the long rains, faced with a bundle of oak planks, he rose before
the light and walked the boundary path. Those watching learned that weather
forgives no schedule. Nothing spectacular happened, which was the point.

The ferryman sorted the day's tasks from heaviest to lightest before the
harvest. There was a frame heavy with honey waiting, and it would not wait
kindly. He had learned that borrowed strength must be returned with interest,
so the first hour went to looking rather than doing. The account closed even,
and the lamp went out early.

Under the winter stars, the ferryman took stock of a kiln of thin-walled jars.
An old habit said hurry, and an older one said check the joints. He trusted
the older habit, having learned that the village remembers quality longer than
speed. What remained undone was written down without shame.

It was said in the village that the ferryman never hurried and never stalled.
In early spring this was tested by a course of river stone. He kept a narrow
ledger of what went out and what came back, remembering that a tool kept clean
is a tool half mastered. It was enough, and enough was the whole craft.

chapter 31

The gardener kept one rule above the bench: name the problem before touching
it. During the long rains, faced with a frame heavy with honey, she kept a
narrow ledger of what went out and what came back. Those watching learned that
borrowed strength must be returned with interest. What remained undone was
written down without shame.

The gardener taught an apprentice by letting the mistake almost happen before
the harvest. There was a kiln of thin-walled jars waiting, and it would not
wait kindly. She had learned that the village remembers quality longer than
speed, so the first hour went to looking rather than doing. It was enough, and
enough was the whole craft.

Under the winter stars, the gardener took stock of a course of river stone. An
old habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that a tool kept clean is a tool half mastered.
The day ended the way well-planned days end, quietly.

It was said in the village that the gardener never hurried and never stalled.
In early spring this was tested by a rope for the far landing. She measured
twice against the old brass rule, remembering that what is counted honestly
can be improved honestly. By dusk the work had a shape that could be trusted.

chapter 32

The carpenter traded an hour of talk for a week of goodwill before the
harvest. There was a bolt pattern of plain cloth waiting, and it would not
wait kindly. He had learned that the second attempt should be smaller than the
first, so the first hour went to looking rather than doing. It was enough, and
enough was the whole craft.

Under the winter stars, the carpenter took stock of a flock worn thin by
March. An old habit said hurry, and an older one said check the joints. He
trusted the older habit, having learned that patience is a kind of work. The
day ended the way well-planned days end, quietly.

It was said in the village that the carpenter never hurried and never stalled.
In early spring this was tested by a pot of slow broth. He set aside a tenth
part for the lean month, remembering that weather forgives no schedule. By
dusk the work had a shape that could be trusted.

The carpenter kept one rule above the bench: name the problem before touching
it. At midsummer, faced with a row of seedlings, he mended the smallest break
first. Those watching learned that borrowed strength must be returned with
interest. Nothing spectacular happened, which was the point.

chapter 33

Under the winter stars, the miller took stock of a kiln of thin-walled jars.
An old habit said hurry, and an older one said check the joints. She trusted
the older habit, having learned that good seams are invisible until they fail.
The day ended the way well-planned days end, quietly.

It was said in the village that the miller never hurried and never stalled. In
early spring this was tested by a course of river stone. She mended the
smallest break first, remembering that most errors announce themselves twice
before they cost anything. By dusk the work had a shape that could be trusted.

The miller kept one rule above the bench: name the problem before touching it.
At midsummer, faced with a rope for the far landing, she watched the sky and
changed nothing yet. Those watching learned that small daily measures beat
rare heroic ones. Nothing spectacular happened, which was the point.

The miller rose before the light and walked the boundary path after the first
frost. There was a bundle of oak planks waiting, and it would not wait kindly.
She had learned that the second attempt should be smaller than the first, so
the first hour went to looking rather than doing. The account closed even, and
the lamp went out early.

chapter 34

It was said in the village that the beekeeper never hurried and never stalled.
In early spring this was tested by a flock worn thin by March. He watched the
sky and changed nothing yet, remembering that the village remembers quality
longer than speed. By dusk the work had a shape that could be trusted.

The beekeeper kept one rule above the bench: name the problem before touching
it. At midsummer, faced with a pot of slow broth, he rose before the light and
walked the boundary path. Those watching learned that a tool kept clean is a
tool half mastered. Nothing spectacular happened, which was the point.

The beekeeper sorted the day's tasks from heaviest to lightest after the first
frost. There was a row of seedlings waiting, and it would not wait kindly. He
had learned that what is counted honestly can be improved honestly, so the
first hour went to looking rather than doing. The account closed even, and the
lamp went out early.

During the long rains, the beekeeper took stock of two sacks of barley. An old
habit said hurry, and an older one said check the joints. He trusted the older
habit, having learned that good seams are invisible until they fail. What
remained undone was written down without shame.

chapter 35

The weaver kept one rule above the bench: name the problem before touching it.
At midsummer, faced with a course of river stone, she sorted the day's tasks
from heaviest to lightest. Those watching learned that patience is a kind of
work. Nothing spectacular happened, which was the point.

The weaver sharpened what needed sharpening and oiled the rest after the first
frost. There was a rope for the far landing waiting, and it would not wait
kindly. She had learned that weather forgives no schedule, so the first hour
went to looking rather than doing. The account closed even, and the lamp went
out early.

During the long rains, the weaver took stock of a bundle of oak planks. An old
habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that borrowed strength must be returned with
interest. What remained undone was written down without shame.

It was said in the village that the weaver never hurried and never stalled.
Before the harvest this was tested by a frame heavy with honey. She taught an
apprentice by letting the mistake almost happen, remembering that the village
remembers quality longer than speed. It was enough, and enough was the whole
craft.

chapter 36

The potter kept a narrow ledger of what went out and what came back after the
first frost. There was a pot of slow broth waiting, and it would not wait
kindly. He had learned that most errors announce themselves twice before they
cost anything, so the first hour went to looking rather than doing. The
account closed even, and the lamp went out early.

During the long rains, the potter took stock of a row of seedlings. An old
habit said hurry, and an older one said check the joints. He trusted the older
habit, having learned that small daily measures beat rare heroic ones. What
remained undone was written down without shame.

It was said in the village that the potter never hurried and never stalled.
Before the harvest this was tested by two sacks of barley. He traded an hour
of talk for a week of goodwill, remembering that the second attempt should be
smaller than the first. It was enough, and enough was the whole craft.

The potter kept one rule above the bench: name the problem before touching it.
Under the winter stars, faced with a bolt pattern of plain cloth, he measured
twice against the old brass rule. Those watching learned that patience is a
kind of work. The day ended the way well-planned days end, quietly.

chapter 37

During the long rains, the shepherd took stock of a rope for the far landing.
An old habit said hurry, and an older one said check the joints. She trusted
the older habit, having learned that a tool kept clean is a tool half
mastered. What remained undone was written down without shame.

It was said in the village that the shepherd never hurried and never stalled.
Before the harvest this was tested by a bundle of oak planks. She measured
twice against the old brass rule, remembering that what is counted honestly
can be improved honestly. It was enough, and enough was the whole craft.

The shepherd kept one rule above the bench: name the problem before touching
it. Under the winter stars, faced with a frame heavy with honey, she set aside
a tenth part for the lean month. Those watching learned that good seams are
invisible until they fail. The day ended the way well-planned days end,
quietly.

The shepherd mended the smallest break first in early spring. There was a kiln
of thin-walled jars waiting, and it would not wait kindly. She had learned
that most errors announce themselves twice before they cost anything, so the
first hour went to looking rather than doing. By dusk the work had a shape
that could be trusted.

chapter 38

It was said in the village that the mason never hurried and never stalled.
Before the harvest this was tested by a row of seedlings. He set aside a tenth
part for the lean month, remembering that weather forgives no schedule. It was
enough, and enough was the whole craft.

The mason kept one rule above the bench: name the problem before touching it.
Under the winter stars, faced with two sacks of barley, he mended the smallest
break first. Those watching learned that borrowed strength must be returned
with interest. The day ended the way well-planned days end, quietly.

The mason watched the sky and changed nothing yet in early spring. There was a
bolt pattern of plain cloth waiting, and it would not wait kindly. He had
learned that the village remembers quality longer than speed, so the first
hour went to looking rather than doing. By dusk the work had a shape that
could be trusted.

At midsummer, the mason took stock of a flock worn thin by March. An old habit
said hurry, and an older one said check the joints. He trusted the older
habit, having learned that a tool kept clean is a tool half mastered. Nothing
spectacular happened, which was the point.

chapter 39

The cook kept one rule above the bench: name the problem before touching it.
Under the winter stars, faced with a bundle of oak planks, she watched the sky
and changed nothing yet. Those watching learned that small daily measures beat
rare heroic ones. The day ended the way well-planned days end, quietly.

The cook rose before the light and walked the boundary path in early spring.
There was a frame heavy with honey waiting, and it would not wait kindly. She
had learned that the second attempt should be smaller than the first, so the
first hour went to looking rather than doing. By dusk the work had a shape
that could be trusted.

At midsummer, the cook took stock of a kiln of thin-walled jars. An old habit
said hurry, and an older one said check the joints. She trusted the older
habit, having learned that patience is a kind)corpus";

inline constexpr const char* kPart1 = R"corpus( of work. Nothing spectacular
happened, which was the point.

It was said in the village that the cook never hurried and never stalled.
After the first frost this was tested by a course of river stone. She
sharpened what needed sharpening and oiled the rest, remembering that weather
forgives no schedule. The account closed even, and the lamp went out early.

chapter 40

The ferryman sorted the day's tasks from heaviest to lightest in early spring.
There was two sacks of barley waiting, and it would not wait kindly. He had
learned that what is counted honestly can be improved honestly, so the first
hour went to looking rather than doing. By dusk the work had a shape that
could be trusted.

At midsummer, the ferryman took stock of a bolt pattern of plain cloth. An old
habit said hurry, and an older one said check the joints. He trusted the older
habit, having learned that good seams are invisible until they fail. Nothing
spectacular happened, which was the point.

It was said in the village that the ferryman never hurried and never stalled.
After the first frost this was tested by a flock worn thin by March. He kept a
narrow ledger of what went out and what came back, remembering that most
errors announce themselves twice before they cost anything. The account closed
even, and the lamp went out early.

The ferryman kept one rule above the bench: name the problem before touching
it. During the long rains, faced with a pot of slow broth, he taught an
apprentice by letting the mistake almost happen. Those watching learned that
small daily measures beat rare heroic ones. What remained undone was written
down without shame.

chapter 41

The gardener taught an apprentice by letting the mistake almost happen in
early spring. There was a bolt pattern of plain cloth waiting, and it would
not wait kindly. She had learned that good seams are invisible until they
fail, so the first hour went to looking rather than doing. The account closed
even, and the lamp went out early.

At midsummer, the gardener took stock of a flock worn thin by March. An old
habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that most errors announce themselves twice before
they cost anything. What remained undone was written down without shame.

It was said in the village that the gardener never hurried and never stalled.
After the first frost this was tested by a pot of slow broth. She measured
twice against the old brass rule, remembering that small daily measures beat
rare heroic ones. It was enough, and enough was the whole craft.

The gardener kept one rule above the bench: name the problem before touching
it. During the long rains, faced with a row of seedlings, she set aside a
tenth part for the lean month. Those watching learned that the second attempt
should be smaller than the first. The day ended the way well-planned days end,
quietly.

chapter 42

At midsummer, the carpenter took stock of a kiln of thin-walled jars. An old
habit said hurry, and an older one said check the joints. He trusted the older
habit, having learned that the village remembers quality longer than speed.
What remained undone was written down without shame.

It was said in the village that the carpenter never hurried and never stalled.
After the first frost this was tested by a course of river stone. He set aside
a tenth part for the lean month, remembering that a tool kept clean is a tool
half mastered. It was enough, and enough was the whole craft.

The carpenter kept one rule above the bench: name the problem before touching
it. During the long rains, faced with a rope for the far landing, he mended
the smallest break first. Those watching learned that what is counted honestly
can be improved honestly. The day ended the way well-planned days end,
quietly.

The carpenter watched the sky and changed nothing yet before the harvest.
There was a bundle of oak planks waiting, and it would not wait kindly. He had
learned that good seams are invisible until they fail, so the first hour went
to looking rather than doing. By dusk the work had a shape that could be
trusted.

chapter 43

It was said in the village that the miller never hurried and never stalled.
After the first frost this was tested by a flock worn thin by March. She
mended the smallest break first, remembering that patience is a kind of work.
It was enough, and enough was the whole craft.

The miller kept one rule above the bench: name the problem before touching it.
During the long rains, faced with a pot of slow broth, she watched the sky and
changed nothing yet. Those watching learned that weather forgives no schedule.
The day ended the way well-planned days end, quietly.

The miller rose before the light and walked the boundary path before the
harvest. There was a row of seedlings waiting, and it would not wait kindly.
She had learned that borrowed strength must be returned with interest, so the
first hour went to looking rather than doing. By dusk the work had a shape
that could be trusted.

Under the winter stars, the miller took stock of two sacks of barley. An old
habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that the village remembers quality longer than
speed. Nothing spectacular happened, which was the point.

chapter 44

The beekeeper kept one rule above the bench: name the problem before touching
it. During the long rains, faced with a course of river stone, he rose before
the light and walked the boundary path. Those watching learned that most
errors announce themselves twice before they cost anything. The day ended the
way well-planned days end, quietly.

The beekeeper sorted the day's tasks from heaviest to lightest before the
harvest. There was a rope for the far landing waiting, and it would not wait
kindly. He had learned that small daily measures beat rare heroic ones, so the
first hour went to looking rather than doing. By dusk the work had a shape
that could be trusted.

Under the winter stars, the beekeeper took stock of a bundle of oak planks. An
old habit said hurry, and an older one said check the joints. He trusted the
older habit, having learned that the second attempt should be smaller than the
first. Nothing spectacular happened, which was the point.

It was said in the village that the beekeeper never hurried and never stalled.
In early spring this was tested by a frame heavy with honey. He kept a narrow
ledger of what went out and what came back, remembering that patience is a
kind of work. The account closed even, and the lamp went out early.

chapter 45

The weaver sharpened what needed sharpening and oiled the rest before the
harvest. There was a pot of slow broth waiting, and it would not wait kindly.
She had learned that a tool kept clean is a tool half mastered, so the first
hour went to looking rather than doing. By dusk the work had a shape that
could be trusted.

Under the winter stars, the weaver took stock of a row of seedlings. An old
habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that what is counted honestly can be improved
honestly. Nothing spectacular happened, which was the point.

It was said in the village that the weaver never hurried and never stalled. In
early spring this was tested by two sacks of barley. She taught an apprentice
by letting the mistake almost happen, remembering that good seams are
invisible until they fail. The account closed even, and the lamp went out
early.

The weaver kept one rule above the bench: name the problem before touching it.
At midsummer, faced with a bolt pattern of plain cloth, she traded an hour of
talk for a week of goodwill. Those watching learned that most errors announce
themselves twice before they cost anything. What remained undone was written
down without shame.

chapter 46

Under the winter stars, the potter took stock of a rope for the far landing.
An old habit said hurry, and an older one said check the joints. He trusted
the older habit, having learned that weather forgives no schedule. Nothing
spectacular happened, which was the point.

It was said in the village that the potter never hurried and never stalled. In
early spring this was tested by a bundle of oak planks. He traded an hour of
talk for a week of goodwill, remembering that borrowed strength must be
returned with interest. The account closed even, and the lamp went out early.

The potter kept one rule above the bench: name the problem before touching it.
At midsummer, faced with a frame heavy with honey, he measured twice against
the old brass rule. Those watching learned that the village remembers quality
longer than speed. What remained undone was written down without shame.

The potter set aside a tenth part for the lean month after the first frost.
There was a kiln of thin-walled jars waiting, and it would not wait kindly. He
had learned that a tool kept clean is a tool half mastered, so the first hour
went to looking rather than doing. It was enough, and enough was the whole
craft.

chapter 47

It was said in the village that the shepherd never hurried and never stalled.
In early spring this was tested by a row of seedlings. She measured twice
against the old brass rule, remembering that small daily measures beat rare
heroic ones. The account closed even, and the lamp went out early.

The shepherd kept one rule above the bench: name the problem before touching
it. At midsummer, faced with two sacks of barley, she set aside a tenth part
for the lean month. Those watching learned that the second attempt should be
smaller than the first. What remained undone was written down without shame.

The shepherd mended the smallest break first after the first frost. There was
a bolt pattern of plain cloth waiting, and it would not wait kindly. She had
learned that patience is a kind of work, so the first hour went to looking
rather than doing. It was enough, and enough was the whole craft.

During the long rains, the shepherd took stock of a flock worn thin by March.
An old habit said hurry, and an older one said check the joints. She trusted
the older habit, having learned that weather forgives no schedule. The day
ended the way well-planned days end, quietly.

chapter 48

The mason kept one rule above the bench: name the problem before touching it.
At midsummer, faced with a bundle of oak planks, he mended the smallest break
first. Those watching learned that what is counted honestly can be improved
honestly. What remained undone was written down without shame.

The mason watched the sky and changed nothing yet after the first frost. There
was a frame heavy with honey waiting, and it would not wait kindly. He had
learned that good seams are invisible until they fail, so the first hour went
to looking rather than doing. It was enough, and enough was the whole craft.

During the long rains, the mason took stock of a kiln of thin-walled jars. An
old habit said hurry, and an older one said check the joints. He trusted the
older habit, having learned that most errors announce themselves twice before
they cost anything. The day ended the way well-planned days end, quietly.

It was said in the village that the mason never hurried and never stalled.
Before the harvest this was tested by a course of river stone. He sorted the
day's tasks from heaviest to lightest, remembering that small daily measures
beat rare heroic ones. By dusk the work had a shape that could be trusted.

chapter 49

The cook rose before the light and walked the boundary path after the first
frost. There was two sacks of barley waiting, and it would not wait kindly.
She had learned that borrowed strength must be returned with interest, so the
first hour went to looking rather than doing. It was enough, and enough was
the whole craft.

During the long rains, the cook took stock of a bolt pattern of plain cloth.
An old habit said hurry, and an older one said check the joints. She trusted
the older habit, having learned that the village remembers quality longer than
speed. The day ended the way well-planned days end, quietly.

It was said in the village that the cook never hurried and never stalled.
Before the harvest this was tested by a flock worn thin by March. She
sharpened what needed sharpening and oiled the rest, remembering that a tool
kept clean is a tool half mastered. By dusk the work had a shape that could be
trusted.

The cook kept one rule above the bench: name the problem before touching it.
Under the winter stars, faced with a pot of slow broth, she kept a narrow
ledger of what went out and what came back. Those watching learned that what
is counted honestly can be improved honestly. Nothing spectacular happened,
which was the point.

chapter 50

During the long rains, the ferryman took stock of a frame heavy with honey. An
old habit said hurry, and an older one said check the joints. He trusted the
older habit, having learned that the second attempt should be smaller than the
first. The day ended the way well-planned days end, quietly.

It was said in the village that the ferryman never hurried and never stalled.
Before the harvest this was tested by a kiln of thin-walled jars. He kept a
narrow ledger of what went out and what came back, remembering that patience
is a kind of work. By dusk the work had a shape that could be trusted.

The ferryman kept one rule above the bench: name the problem before touching
it. Under the winter stars, faced with a course of river stone, he taught an
apprentice by letting the mistake almost happen. Those watching learned that
weather forgives no schedule. Nothing spectacular happened, which was the
point.

The ferryman traded an hour of talk for a week of goodwill in early spring.
There was a rope for the far landing waiting, and it would not wait kindly. He
had learned that borrowed strength must be returned with interest, so the
first hour went to looking rather than doing. The account closed even, and the
lamp went out early.

chapter 51

During the long rains, the gardener took stock of a kiln of thin-walled jars.
An old habit said hurry, and an older one said check the joints. She trusted
the older habit, having learned that patience is a kind of work. Nothing
spectacular happened, which was the point.

It was said in the village that the gardener never hurried and never stalled.
Before the harvest this was tested by a course of river stone. She measured
twice against the old brass rule, remembering that weather forgives no
schedule. The account closed even, and the lamp went out early.

The gardener kept one rule above the bench: name the problem before touching
it. Under the winter stars, faced with a rope for the far landing, she set
aside a tenth part for the lean month. Those watching learned that borrowed
strength must be returned with interest. What remained undone was written down
without shame.

The gardener mended the smallest break first in early spring. There was a
bundle of oak planks waiting, and it would not wait kindly. She had learned
that the village remembers quality longer than speed, so the first hour went
to looking rather than doing. It was enough, and enough was the whole craft.

chapter 52

It was said in the village that the carpenter never hurried and never stalled.
Before the harvest this was tested by a flock worn thin by March. He set aside
a tenth part for the lean month, remembering that most errors announce
themselves twice before they cost anything. The account closed even, and the
lamp went out early.

The carpenter kept one rule above the bench: name the problem before touching
it. Under the winter stars, faced with a pot of slow broth, he mended the
smallest break first. Those watching learned that small daily measures beat
rare heroic ones. What remained undone was written down without shame.

The carpenter watched the sky and changed nothing yet in early spring. There
was a row of seedlings waiting, and it would not wait kindly. He had learned
that the second attempt should be smaller than the first, so the first hour
went to looking rather than doing. It was enough, and enough was the whole
craft.

At midsummer, the carpenter took stock of two sacks of barley. An old habit
said hurry, and an older one said check the joints. He trusted the older
habit, having learned that patience is a kind of work. The day ended the way
well-planned days end, quietly.

chapter 53

The miller kept one rule above the bench: name the problem before touching it.
Under the winter stars, faced with a course of river stone, she watched the
sky and changed nothing yet. Those watching learned that a tool kept clean is
a tool half mastered. What remained undone was written down without shame.

The miller rose before the light and walked the boundary path in early spring.
There was a rope for the far landing waiting, and it would not wait kindly.
She had learned that what is counted honestly can be improved honestly, so the
first hour went to looking rather than doing. It was enough, and enough was
the whole craft.

At midsummer, the miller took stock of a bundle of oak planks. An old habit
said hurry, and an older one said check the joints. She trusted the older
habit, having learned that good seams are invisible until they fail. The day
ended the way well-planned days end, quietly.

It was said in the village that the miller never hurried and never stalled.
After the first frost this was tested by a frame heavy with honey. She
sharpened what needed sharpening and oiled the rest, remembering that most
errors announce themselves twice before they cost anything. By dusk the work
had a shape that could be trusted.

chapter 54

The beekeeper sorted the day's tasks from heaviest to lightest in early
spring. There was a pot of slow broth waiting, and it would not wait kindly.
He had learned that weather forgives no schedule, so the first hour went to
looking rather than doing. It was enough, and enough was the whole craft.

At midsummer, the beekeeper took stock of a row of seedlings. An old habit
said hurry, and an older one said check the joints. He trusted the older
habit, having learned that borrowed strength must be returned with interest.
The day ended the way well-planned days end, quietly.

It was said in the village that the beekeeper never hurried and never stalled.
After the first frost this was tested by two sacks of barley. He kept a narrow
ledger of what went out and what came back, remembering that the village
remembers quality longer than speed. By dusk the work had a shape that could
be trusted.

The beekeeper kept one rule above the bench: name the problem before touching
it. During the long rains, faced with a bolt pattern of plain cloth, he taught
an apprentice by letting the mistake almost happen. Those watching learned
that a tool kept clean is a tool half mastered. Nothing spectacular happened,
which was the point.

chapter 55

At midsummer, the weaver took stock of a rope for the far landing. An old
habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that small daily measures beat rare heroic ones.
The day ended the way well-planned days end, quietly.

It was said in the village that the weaver never hurried and never stalled.
After the first frost this was tested by a bundle of oak planks. She taught an
apprentice by letting the mistake almost happen, remembering that the second
attempt should be smaller than the first. By dusk the work had a shape that
could be trusted.

The weaver kept one rule above the bench: name the problem before touching it.
During the long rains, faced with a frame heavy with honey, she traded an hour
of talk for a week of goodwill. Those watching learned that patience is a kind
of work. Nothing spectacular happened, which was the point.

The weaver measured twice against the old brass rule before the harvest. There
was a kiln of thin-walled jars waiting, and it would not wait kindly. She had
learned that weather forgives no schedule, so the first hour went to looking
rather than doing. The account closed even, and the lamp went out early.

chapter 56

It was said in the village that the potter never hurried and never stalled.
After the first frost this was tested by a row of seedlings. He traded an hour
of talk for a week of goodwill, remembering that what is counted honestly can
be improved honestly. By dusk the work had a shape that could be trusted.

The potter kept one rule above the bench: name the problem before touching it.
During the long rains, faced with two sacks of barley, he measured twice
against the old brass rule. Those watching learned that good seams are
invisible until they fail. Nothing spectacular happened, which was the point.

The potter set aside a tenth part for the lean month before the harvest. There
was a bolt pattern of plain cloth waiting, and it would not wait kindly. He
had learned that most errors announce themselves twice before they cost
anything, so the first hour went to looking rather than doing. The account
closed even, and the lamp went out early.

Under the winter stars, the potter took stock of a flock worn thin by March.
An old habit said hurry, and an older one said check the joints. He trusted
the older habit, having learned that small daily measures beat rare heroic
ones. What remained undone was written down without shame.

chapter 57

The shepherd kept one rule above the bench: name the problem before touching
it. During the long rains, faced with a bundle of oak planks, she set aside a
tenth part for the lean month. Those watching learned that borrowed strength
must be returned with interest. Nothing spectacular happened, which was the
point.

The shepherd mended the smallest break first before the harvest. There was a
frame heavy with honey waiting, and it would not wait kindly. She had learned
that the village remembers quality longer than speed, so the first hour went
to looking rather than doing. The account closed even, and the lamp went out
early.

Under the winter stars, the shepherd took stock of a kiln of thin-walled jars.
An old habit said hurry, and an older one said check the joints. She trusted
the older habit, having learned that a tool kept clean is a tool half
mastered. What remained undone was written down without shame.

It was said in the village that the shepherd never hurried and never stalled.
In early spring this was tested by a course of river stone. She rose before
the light and walked the boundary path, remembering that what is counted
honestly can be improved honestly. It was enough, and enough was the whole
craft.

chapter 58

The mason watched the sky and changed nothing yet before the harvest. There
was two sacks of barley waiting, and it would not wait kindly. He had learned
that the second attempt should be smaller than the first, so the first hour
went to looking rather than doing. The account closed even, and the lamp went
out early.

Under the winter stars, the mason took stock of a bolt pattern of plain cloth.
An old habit said hurry, and an older one said check the joints. He trusted
the older habit, having learned that patience is a kind of work. What remained
undone was written down without shame.

It was said in the village that the mason never hurried and never stalled. In
early spring this was tested by a flock worn thin by March. He sorted the
day's tasks from heaviest to lightest, remembering that weather forgives no
schedule. It was enough, and enough was the whole craft.

The mason kept one rule above the bench: name the problem before touching it.
At midsummer, faced with a pot of slow broth, he sharpened what needed
sharpening and oiled the rest. Those watching learned that borrowed strength
must be returned with interest. The day ended the way well-planned days end,
quietly.

chapter 59

Under the winter stars, the cook took stock of a frame heavy with honey. An
old habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that good seams are invisible until they fail.
What remained undone was written down without shame.

It was said in the village that the cook never hurried and never stalled. In
early spring this was tested by a kiln of thin-walled jars. She sharpened what
needed sharpening and oiled the rest, remembering that most errors announce
themselves twice before they cost anything. It was enough, and enough was the
whole craft.

The cook kept one rule above the bench: name the problem before touching it.
At midsummer, faced with a course of river stone, she kept a narrow ledger of
what went out and what came back. Those watching learned that small daily
measures beat rare heroic ones. The day ended the way well-planned days end,
quietly.

The cook taught an apprentice by letting the mistake almost happen after the
first frost. There was a rope for the far landing waiting, and it would not
wait kindly. She had learned that the second attempt should be smaller than
the first, so the first hour went to looking rather than doing. By dusk the
work had a shape that could be trusted.

chapter 60

It was said in the village that the ferryman never hurried and never stalled.
In early spring this was tested by a bolt pattern of plain cloth. He kept a
narrow ledger of what went out and what came back, remembering that the
village remembers quality longer than speed. It was enough, and enough was the
whole craft.

The ferryman kept one rule above the bench: name the problem before touching
it. At midsummer, faced with a flock worn thin by March, he taught an
apprentice by letting the mistake almost happen. Those watching learned that a
tool kept clean is a tool half mastered. The day ended the way well-planned
days end, quietly.

The ferryman traded an hour of talk for a week of goodwill after the first
frost. There was a pot of slow broth waiting, and it would not wait kindly. He
had learned that what is counted honestly can be improved honestly, so the
first hour went to looking rather than doing. By dusk the work had a shape
that could be trusted.

During the long rains, the ferryman took stock of a row of seedlings. An old
habit said hurry, and an older one said check the joints. He trusted the older
habit, having learned that good seams are invisible until they fail. Nothing
spectacular happened, which was the point.

chapter 61

It was said in the village that the gardener never hurried and never stalled.
In early spring this was tested by a flock worn thin by March. She measured
twice against the old brass rule, remembering that a tool kept clean is a tool
half mastered. By dusk the work had a shape that could be trusted.

The gardener kept one rule above the bench: name the problem before touching
it. At midsummer, faced with a pot of slow broth, she set aside a tenth part
for the lean month. Those watching learned that what is counted honestly can
be improved honestly. Nothing spectacular happened, which was the point.

The gardener mended the smallest break first after the first frost. There was
a row of seedlings waiting, and it would not wait kindly. She had learned that
good seams are invisible until they fail, so the first hour went to looking
rather than doing. The account closed even, and the lamp went out early.

During the long rains, the gardener took stock of two sacks of barley. An old
habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that most errors announce themselves twice before
they cost anything. What remained undone was written down without shame.

chapter 62

The carpenter kept one rule above the bench: name the problem before touching
it. At midsummer, faced with a course of river stone, he mended the smallest
break first. Those watching learned that weather forgives no schedule. Nothing
spectacular happened, which was the point.

The carpenter watched the sky and changed nothing yet after the first frost.
There was a rope for the far landing waiting, and it would not wait kindly. He
had learned that borrowed strength must be returned with interest, so the
first hour went to looking rather than doing. The account closed even, and the
lamp went out early.

During the long rains, the carpenter took stock of a bundle of oak planks. An
old habit said hurry, and an older one said check the joints. He trusted the
older habit, having learned that the village remembers quality longer than
speed. What remained undone was written down without shame.

It was said in the village that the carpenter never hurried and never stalled.
Before the harvest this was tested by a frame heavy with honey. He sorted the
day's tasks from heaviest to lightest, remembering that a tool kept clean is a
tool half mastered. It was enough, and enough was the whole craft.

chapter 63

The miller rose before the light and walked the boundary path after the first
frost. There was a pot of slow broth waiting, and it would not wait kindly.
She had learned that small daily measures beat rare heroic ones, so the first
hour went to looking rather than doing. The account closed even, and the lamp
went out early.

During the long rains, the miller took stock of a row of seedlings. An old
habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that the second attempt should be smaller than the
first. What remained undone was written down without shame.

It was said in the village that the miller never hurried and never stalled.
Before the harvest this was tested by two sacks of barley. She sharpened what
needed sharpening and oiled the rest, remembering that patience is a kind of
work. It was enough, and enough was the whole craft.

The miller kept one rule above the bench: name the problem before touching it.
Under the winter stars, faced with a bolt pattern of plain cloth, she kept a
narrow ledger of what went out and what came back. Those watching learned that
weather forgives no schedule. The day ended the way well-planned days end,
quietly.

chapter 64

During the long rains, the beekeeper took stock of a rope for the far landing.
An old habit said hurry, and an older one said check the joints. He trusted
the older habit, having learned that what is counted honestly can be improved
honestly. What remained undone was written down without shame.

It was said in the village that the beekeeper never hurried and never stalled.
Before the harvest this was tested by a bundle of oak planks. He kept a narrow
ledger of what went out and what came back, remembering that good seams are
invisible until they fail. It was enough, and enough was the whole craft.

The beekeeper kept one rule above the bench: name the problem before touching
it. Under the winter stars, faced with a frame heavy with honey, he taught an
apprentice by letting the mistake almost happen. Those watching learned that
most errors announce themselves twice before they cost anything. The day ended
the way well-planned days end, quietly.

The beekeeper traded an hour of talk for a week of goodwill in early spring.
There was a kiln of thin-walled jars waiting, and it would not wait kindly. He
had learned that small daily measures beat rare heroic ones, so the first hour
went to looking rather than doing. By dusk the work had a shape that could be
trusted.

chapter 65

It was said in the village that the weaver never hurried and never stalled.
Before the harvest this was tested by a row of seedlings. She taught an
apprentice by letting the mistake almost happen, remembering that borrowed
strength must be returned with interest. It was enough, and enough was the
whole craft.

The weaver kept one rule above the bench: name the problem before touching it.
Under the winter stars, faced with two sacks of barley, she traded an hour of
talk for a week of goodwill. Those watching learned that the village remembers
quality longer than speed. The day ended the way well-planned days end,
quietly.

The weaver measured twice against the old brass rule in early spring. There
was a bolt pattern of plain cloth waiting, and it would not wait kindly. She
had learned that a tool kept clean is a tool half mastered, so the first hour
went to looking rather than doing. By dusk the work had a shape that could be
trusted.

At midsummer, the weaver took stock of a flock worn thin by March. An old
habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that what is counted honestly can be improved
honestly. Nothing spectacular happened, which was the point.

chapter 66

The potter kept one rule above the bench: name the problem before touching it.
Under the winter stars, faced with a bundle of oak planks, he measured twice
against the old brass rule. Those watching learned that the second attempt
should be smaller than the first. The day ended the way well-planned days end,
quietly.

The potter set aside a tenth part for the lean month in early spring. There
was a frame heavy with honey waiting, and it would not wait kindly. He had
learned that patience is a kind of work, so the first hour went to looking
rather than doing. By dusk the work had a shape that could be trusted.

At midsummer, the potter took stock of a kiln of thin-walled jars. An old
habit said hurry, and an older one said check the joints. He trusted the older
habit, having learned that weather forgives no schedule. Nothing spectacular
happened, which was the point.

It was said in the village that the potter never hurried and never stalled.
After the first frost this was tested by a course of river stone. He watched
the sky and changed nothing yet, remembering that borrowed strength must be
returned with interest. The account closed even, and the lamp went out early.

chapter 67

The shepherd mended the smallest break first in early spring. There was two
sacks of barley waiting, and it would not wait kindly. She had learned that
good seams are invisible until they fail, so the first hour went to looking
rather than doing. By dusk the work had a shape that could be trusted.

At midsummer, the shepherd took stock of a bolt pattern of plain cloth. An old
habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that most errors announce themselves twice before
they cost anything. Nothing spectacular happened, which was the point.

It was said in the village that the shepherd never hurried and never stalled.
After the first frost this was tested by a flock worn thin by March. She rose
before the light and walked the boundary path, remembering that small daily
measures beat rare heroic ones. The account closed even, and the lamp went out
early.

The shepherd kept one rule above the bench: name the problem before touching
it. During the long rains, faced with a pot of slow broth, she sorted the
day's tasks from heaviest to lightest. Those watching learned that the second
attempt should be smaller than the first. What remained undone was written
down without shame.

chapter 68

At midsummer, the mason took stock of a frame heavy with honey. An old habit
said hurry, and an older one said check the joints. He trusted the older
habit, having learned that the village remembers quality longer than speed.
Nothing spectacular happened, which was the point.

It was said in the village that the mason never hurried and never stalled.
After the first frost this was tested by a kiln of thin-walled jars. He sorted
the day's tasks from heaviest to lightest, remembering that a tool kept clean
is a tool half mastered. The account closed even, and the lamp went out early.

The mason kept one rule above the bench: name the problem before touching it.
During the long rains, faced with a course of river stone, he sharpened what
needed sharpening and oiled the rest. Those watching learned that what is
counted honestly can be improved honestly. What remained undone was written
down without shame.

The mason kept a narrow ledger of what went out and what came back before the
harvest. There was a rope for the far landing waiting, and it would not wait
kindly. He had learned that good seams are invisible until they fail, so the
first hour went to looking rather than doing. It was enough, and enough was
the whole craft.

chapter 69

It was said in the village that the cook never hurried and never stalled.
After the first frost this was tested by a bolt pattern of plain cloth. She
sharpened what needed sharpening and oiled the rest, remembering that patience
is a kind of work. The account closed even, and the lamp went out early.

The cook kept one rule above the bench: name the problem before touching it.
During the long rains, faced with a flock worn thin by March, she kept a
narrow ledger of what went out and what came back. Those watching learned that
weather forgives no schedule. What remained undone was written down without
shame.

The cook taught an apprentice by letting the mistake almost happen before the
harvest. There was a pot of slow broth waiting, and it would not wait kindly.
She had learned that borrowed strength must be returned with interest, so the
first hour went to looking rather than doing. It was enough, and enough was
the whole craft.

Under the winter stars, the cook took stock of a row of seedlings. An old
habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that the village remembers quality longer than
speed. The day ended the way well-planned days end, quietly.

chapter 70

The ferryman kept one rule above the bench: name the problem before touching
it. During the long rains, faced with a kiln of thin-walled jars, he taught an
apprentice by letting the mistake almost happen. Those watching learned that
most errors announce themselves twice before they cost anything. What remained
undone was written down without shame.

The ferryman traded an hour of talk for a week of goodwill before the harvest.
There was a course of river stone waiting, and it would not wait kindly. He
had learned that small daily measures beat rare heroic ones, so the first hour
went to looking rather than doing. It was enough, and enough was the whole
craft.

Under the winter stars, the ferryman took stock of a rope for the far landing.
An old habit said hurry, and an older one said check the joints. He trusted
the older habit, having learned that the second attempt should be smaller than
the first. The day ended the way well-planned days end, quietly.

It was said in the village that the ferryman never hurried and never stalled.
In early spring this was tested by a bundle of oak planks. He set aside a
tenth part for the lean month, remembering that patience is a kind of work. By
dusk the work had a shape that could be trusted.

chapter 71

The gardener kept one rule above the bench: name the problem before touching
it. During the long rains, faced with a course of river stone, she set aside a
tenth part for the lean month. Those watching learned that small daily
measures beat rare heroic ones. The day ended the way well-planned days end,
quietly.

The gardener mended the smallest break first before the harvest. There was a
rope for the far landing waiting, and it would not wait kindly. She had
learned that the second attempt should be smaller than the first, so the first
hour went to looking rather than doing. By dusk the work had a shape that
could be trusted.

Under the winter stars, the gardener took stock of a bundle of oak planks. An
old habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that patience is a kind of work. Nothing
spectacular happened, which was the point.

It was said in the village that the gardener never hurried and never stalled.
In early spring this was tested by a frame heavy with honey. She rose before
the light and walked the boundary path, remembering that weather forgives no
schedule. The account closed even, and the lamp went out early.

chapter 72

The carpenter watched the sky and changed nothing yet before the harvest.
There was a pot of slow broth waiting, and it would not wait kindly. He had
learned that what is counted honestly can be improved honestly, so the first
hour went to looking rather than doing. By dusk the work had a shape that
could be trusted.

Under the winter stars, the carpenter took stock of a row of seedlings. An old
habit said hurry, and an older one said check the joints. He trusted the older
habit, having learned that good seams are invisible until they fail. Nothing
spectacular happened, which was the point.

It was said in the village that the carpenter never hurried and never stalled.
In early spring this was tested by two sacks of barley. He sorted the day's
tasks from heaviest to lightest, remembering that most errors announce
themselves twice before they cost anything. The account closed even, and the
lamp went out early.

The carpenter kept one rule above the bench: name the problem before touching
it. At midsummer, faced with a bolt pattern of plain cloth, he sharpened what
needed sharpening and oiled the rest. Those watching learned that small daily
measures beat rare heroic ones. What remained undone was written down without
shame.

chapter 73

Under the winter stars, the miller took stock of a rope for the far landing.
An old habit said hurry, and an older one said check the joints. She trusted
the older habit, having learned that borrowed strength must be returned with
interest. Nothing spectacular happened, which was the point.

It was said in the village that the miller never hurried and never stalled. In
early spring this was tested by a bundle of oak planks. She sharpened what
needed sharpening and oiled the rest, remembering that the village remembers
quality longer than speed. The account closed even, and the lamp went out
early.

The miller kept one rule above the bench: name the problem before touching it.
At midsummer, faced with a frame heavy with honey, she kept a narrow ledger of
what went out and what came back. Those watching learned that a tool kept
clean is a tool half mastered. What remained undone was written down without
shame.

The miller taught an apprentice by letting the mistake almost happen after the
first frost. There was a kiln of thin-walled jars waiting, and it would not
wait kindly. She had learned that what is counted honestly can be improved
honestly, so the first hour went to looking rather than doing. It was enough,
and enough was the whole craft.

chapter 74

It was said in the village that the beekeeper never hurried and never stalled.
In early spring this was tested by a row of seedlings. He kept a narrow ledger
of what went out and what came back, remembering that the second attempt
should be smaller than the first. The account closed even, and the lamp went
out early.

The beekeeper kept one rule above the bench: name the problem before touching
it. At midsummer, faced with two sacks of barley, he taught an apprentice by
letting the mistake almost happen. Those watching learned that patience is a
kind of work. What remained undone was written down without shame.

The beekeeper traded an hour of talk for a week of goodwill after the first
frost. There was a bolt pattern of plain cloth waiting, and it would not wait
kindly. He had learned that weather forgives no schedule, so the first hour
went to looking rather than doing. It was enough, and enough was the whole
craft.

During the long rains, the beekeeper took stock of a flock worn thin by March.
An old habit said hurry, and an older one said check the joints. He trusted
the older habit, having learned that borrowed strength must be returned with
interest. The day ended the way well-planned days end, quietly.

chapter 75

The weaver kept one rule above the bench: name the problem before touching it.
At midsummer, faced with a bundle of oak planks, she traded an hour of talk
for a week of goodwill. Those watching learned that good seams are invisible
until they fail. What remained undone was written down without shame.

The weaver measured twice against the old brass rule after the first frost.
There was a frame heavy with honey waiting, and it would not wait kindly. She
had learned that most errors announce themselves twice before they cost
anything, so the first hour went to looking rather than doing. It was enough,
and enough was the whole craft.

During the long rains, the weaver took stock of a kiln of thin-walled jars. An
old habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that small daily measures beat rare heroic ones.
The day ended the way well-planned days end, quietly.

It was said in the village that the weaver never hurried and never stalled.
Before the harvest this was tested by a course of river stone. She mended the
smallest break first, remembering that the second attempt should be smaller
than the first. By dusk the work had a shape that could be trusted.

chapter 76

The potter set aside a tenth part for the lean month after the first frost.
There was two sacks of barley waiting, and it would not wait kindly. He had
learned that the village remembers quality longer than speed, so the first
hour went to looking rather than doing. It was enough, and enough was the
whole craft.

During the long rains, the potter took stock of a bolt pattern of plain cloth.
An old habit said hurry, and an older one said check the joints. He trusted
the older habit, having learned that a tool kept clean is a tool half
mastered. The day ended the way well-planned days end, quietly.

It was said in the village that the potter never hurried and never stalled.
Before the harvest this was tested by a flock worn thin by March. He watched
the sky and changed nothing yet, remembering that what is counted honestly can
be improved honestly. By dusk the work had a shape that could be trusted.

The potter kept one rule above the bench: name the problem before touching it.
Under the winter stars, faced with a pot of slow broth, he rose before the
light and walked the boundary path. Those watching learned that good seams are
invisible until they fail. Nothing spectacular happened, which was the point.

chapter 77

During the long rains, the shepherd took stock of a frame heavy with honey. An
old habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that patience is a kind of work. The day ended the
way well-planned days end, quietly.

It was said in the village that the shepherd never hurried and never stalled.
Before the harvest this was tested by a kiln of thin-walled jars. She rose
before the light and walked the boundary path, remembering that weather
forgives no schedule. By dusk the work had a shape that could be trusted.

The shepherd kept one rule above the bench: name the problem before touching
it. Under the winter stars, faced with a course of river stone, she sorted the
day's tasks from heaviest to lightest. Those watching learned that borrowed
strength must be returned with interest. Nothing spectacular happened, which
was the point.

The shepherd sharpened what needed sharpening and oiled the rest in early
spring. There was a rope for the far landing waiting, and it would not wait
kindly. She had learned that the village remembers quality longer than speed,
so the first hour went to looking rather than doing. The account closed even,
and the lamp went out early.

chapter 78

It was said in the village that the mason never hurried and never stalled.
Before the harvest this was tested by a bolt pattern of plain cloth. He sorted
the day's tasks from heaviest to lightest, remembering that most errors
announce themselves twice before they cost anything. By dusk the work had a
shape that could be trusted.

The mason kept one rule above the bench: name the problem before touching it.
Under the winter stars)corpus";

inline constexpr const char* kPart2 = R"corpus(, faced with a flock worn thin by March, he sharpened
what needed sharpening and oiled the rest. Those watching learned that small
daily measures beat rare heroic ones. Nothing spectacular happened, which was
the point.

The mason kept a narrow ledger of what went out and what came back in early
spring. There was a pot of slow broth waiting, and it would not wait kindly.
He had learned that the second attempt should be smaller than the first, so
the first hour went to looking rather than doing. The account closed even, and
the lamp went out early.

At midsummer, the mason took stock of a row of seedlings. An old habit said
hurry, and an older one said check the joints. He trusted the older habit,
having learned that patience is a kind of work. What remained undone was
written down without shame.

chapter 79

The cook kept one rule above the bench: name the problem before touching it.
Under the winter stars, faced with a kiln of thin-walled jars, she kept a
narrow ledger of what went out and what came back. Those watching learned that
a tool kept clean is a tool half mastered. Nothing spectacular happened, which
was the point.

The cook taught an apprentice by letting the mistake almost happen in early
spring. There was a course of river stone waiting, and it would not wait
kindly. She had learned that what is counted honestly can be improved
honestly, so the first hour went to looking rather than doing. The account
closed even, and the lamp went out early.

At midsummer, the cook took stock of a rope for the far landing. An old habit
said hurry, and an older one said check the joints. She trusted the older
habit, having learned that good seams are invisible until they fail. What
remained undone was written down without shame.

It was said in the village that the cook never hurried and never stalled.
After the first frost this was tested by a bundle of oak planks. She measured
twice against the old brass rule, remembering that most errors announce
themselves twice before they cost anything. It was enough, and enough was the
whole craft.

chapter 80

The ferryman traded an hour of talk for a week of goodwill in early spring.
There was a flock worn thin by March waiting, and it would not wait kindly. He
had learned that weather forgives no schedule, so the first hour went to
looking rather than doing. The account closed even, and the lamp went out
early.

At midsummer, the ferryman took stock of a pot of slow broth. An old habit
said hurry, and an older one said check the joints. He trusted the older
habit, having learned that borrowed strength must be returned with interest.
What remained undone was written down without shame.

It was said in the village that the ferryman never hurried and never stalled.
After the first frost this was tested by a row of seedlings. He set aside a
tenth part for the lean month, remembering that the village remembers quality
longer than speed. It was enough, and enough was the whole craft.

The ferryman kept one rule above the bench: name the problem before touching
it. During the long rains, faced with two sacks of barley, he mended the
smallest break first. Those watching learned that a tool kept clean is a tool
half mastered. The day ended the way well-planned days end, quietly.

chapter 81

The gardener mended the smallest break first in early spring. There was a pot
of slow broth waiting, and it would not wait kindly. She had learned that
borrowed strength must be returned with interest, so the first hour went to
looking rather than doing. It was enough, and enough was the whole craft.

At midsummer, the gardener took stock of a row of seedlings. An old habit said
hurry, and an older one said check the joints. She trusted the older habit,
having learned that the village remembers quality longer than speed. The day
ended the way well-planned days end, quietly.

It was said in the village that the gardener never hurried and never stalled.
After the first frost this was tested by two sacks of barley. She rose before
the light and walked the boundary path, remembering that a tool kept clean is
a tool half mastered. By dusk the work had a shape that could be trusted.

The gardener kept one rule above the bench: name the problem before touching
it. During the long rains, faced with a bolt pattern of plain cloth, she
sorted the day's tasks from heaviest to lightest. Those watching learned that
what is counted honestly can be improved honestly. Nothing spectacular
happened, which was the point.

chapter 82

At midsummer, the carpenter took stock of a rope for the far landing. An old
habit said hurry, and an older one said check the joints. He trusted the older
habit, having learned that the second attempt should be smaller than the
first. The day ended the way well-planned days end, quietly.

It was said in the village that the carpenter never hurried and never stalled.
After the first frost this was tested by a bundle of oak planks. He sorted the
day's tasks from heaviest to lightest, remembering that patience is a kind of
work. By dusk the work had a shape that could be trusted.

The carpenter kept one rule above the bench: name the problem before touching
it. During the long rains, faced with a frame heavy with honey, he sharpened
what needed sharpening and oiled the rest. Those watching learned that weather
forgives no schedule. Nothing spectacular happened, which was the point.

The carpenter kept a narrow ledger of what went out and what came back before
the harvest. There was a kiln of thin-walled jars waiting, and it would not
wait kindly. He had learned that borrowed strength must be returned with
interest, so the first hour went to looking rather than doing. The account
closed even, and the lamp went out early.

chapter 83

It was said in the village that the miller never hurried and never stalled.
After the first frost this was tested by a row of seedlings. She sharpened
what needed sharpening and oiled the rest, remembering that good seams are
invisible until they fail. By dusk the work had a shape that could be trusted.

The miller kept one rule above the bench: name the problem before touching it.
During the long rains, faced with two sacks of barley, she kept a narrow
ledger of what went out and what came back. Those watching learned that most
errors announce themselves twice before they cost anything. Nothing
spectacular happened, which was the point.

The miller taught an apprentice by letting the mistake almost happen before
the harvest. There was a bolt pattern of plain cloth waiting, and it would not
wait kindly. She had learned that small daily measures beat rare heroic ones,
so the first hour went to looking rather than doing. The account closed even,
and the lamp went out early.

Under the winter stars, the miller took stock of a flock worn thin by March.
An old habit said hurry, and an older one said check the joints. She trusted
the older habit, having learned that the second attempt should be smaller than
the first. What remained undone was written down without shame.

chapter 84

The beekeeper kept one rule above the bench: name the problem before touching
it. During the long rains, faced with a bundle of oak planks, he taught an
apprentice by letting the mistake almost happen. Those watching learned that
the village remembers quality longer than speed. Nothing spectacular happened,
which was the point.

The beekeeper traded an hour of talk for a week of goodwill before the
harvest. There was a frame heavy with honey waiting, and it would not wait
kindly. He had learned that a tool kept clean is a tool half mastered, so the
first hour went to looking rather than doing. The account closed even, and the
lamp went out early.

Under the winter stars, the beekeeper took stock of a kiln of thin-walled
jars. An old habit said hurry, and an older one said check the joints. He
trusted the older habit, having learned that what is counted honestly can be
improved honestly. What remained undone was written down without shame.

It was said in the village that the beekeeper never hurried and never stalled.
In early spring this was tested by a course of river stone. He set aside a
tenth part for the lean month, remembering that good seams are invisible until
they fail. It was enough, and enough was the whole craft.

chapter 85

The weaver measured twice against the old brass rule before the harvest. There
was two sacks of barley waiting, and it would not wait kindly. She had learned
that patience is a kind of work, so the first hour went to looking rather than
doing. The account closed even, and the lamp went out early.

Under the winter stars, the weaver took stock of a bolt pattern of plain
cloth. An old habit said hurry, and an older one said check the joints. She
trusted the older habit, having learned that weather forgives no schedule.
What remained undone was written down without shame.

It was said in the village that the weaver never hurried and never stalled. In
early spring this was tested by a flock worn thin by March. She mended the
smallest break first, remembering that borrowed strength must be returned with
interest. It was enough, and enough was the whole craft.

The weaver kept one rule above the bench: name the problem before touching it.
At midsummer, faced with a pot of slow broth, she watched the sky and changed
nothing yet. Those watching learned that the village remembers quality longer
than speed. The day ended the way well-planned days end, quietly.

chapter 86

Under the winter stars, the potter took stock of a frame heavy with honey. An
old habit said hurry, and an older one said check the joints. He trusted the
older habit, having learned that most errors announce themselves twice before
they cost anything. What remained undone was written down without shame.

It was said in the village that the potter never hurried and never stalled. In
early spring this was tested by a kiln of thin-walled jars. He watched the sky
and changed nothing yet, remembering that small daily measures beat rare
heroic ones. It was enough, and enough was the whole craft.

The potter kept one rule above the bench: name the problem before touching it.
At midsummer, faced with a course of river stone, he rose before the light and
walked the boundary path. Those watching learned that the second attempt
should be smaller than the first. The day ended the way well-planned days end,
quietly.

The potter sorted the day's tasks from heaviest to lightest after the first
frost. There was a rope for the far landing waiting, and it would not wait
kindly. He had learned that patience is a kind of work, so the first hour went
to looking rather than doing. By dusk the work had a shape that could be
trusted.

chapter 87

It was said in the village that the shepherd never hurried and never stalled.
In early spring this was tested by a bolt pattern of plain cloth. She rose
before the light and walked the boundary path, remembering that a tool kept
clean is a tool half mastered. It was enough, and enough was the whole craft.

The shepherd kept one rule above the bench: name the problem before touching
it. At midsummer, faced with a flock worn thin by March, she sorted the day's
tasks from heaviest to lightest. Those watching learned that what is counted
honestly can be improved honestly. The day ended the way well-planned days
end, quietly.

The shepherd sharpened what needed sharpening and oiled the rest after the
first frost. There was a pot of slow broth waiting, and it would not wait
kindly. She had learned that good seams are invisible until they fail, so the
first hour went to looking rather than doing. By dusk the work had a shape
that could be trusted.

During the long rains, the shepherd took stock of a row of seedlings. An old
habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that most errors announce themselves twice before
they cost anything. Nothing spectacular happened, which was the point.

chapter 88

The mason kept one rule above the bench: name the problem before touching it.
At midsummer, faced with a kiln of thin-walled jars, he sharpened what needed
sharpening and oiled the rest. Those watching learned that weather forgives no
schedule. The day ended the way well-planned days end, quietly.

The mason kept a narrow ledger of what went out and what came back after the
first frost. There was a course of river stone waiting, and it would not wait
kindly. He had learned that borrowed strength must be returned with interest,
so the first hour went to looking rather than doing. By dusk the work had a
shape that could be trusted.

During the long rains, the mason took stock of a rope for the far landing. An
old habit said hurry, and an older one said check the joints. He trusted the
older habit, having learned that the village remembers quality longer than
speed. Nothing spectacular happened, which was the point.

It was said in the village that the mason never hurried and never stalled.
Before the harvest this was tested by a bundle of oak planks. He traded an
hour of talk for a week of goodwill, remembering that a tool kept clean is a
tool half mastered. The account closed even, and the lamp went out early.

chapter 89

The cook taught an apprentice by letting the mistake almost happen after the
first frost. There was a flock worn thin by March waiting, and it would not
wait kindly. She had learned that small daily measures beat rare heroic ones,
so the first hour went to looking rather than doing. By dusk the work had a
shape that could be trusted.

During the long rains, the cook took stock of a pot of slow broth. An old
habit said hurry, and an older one said check the joints. She trusted the
older habit, having learned that the second attempt should be smaller than the
first. Nothing spectacular happened, which was the point.

It was said in the village that the cook never hurried and never stalled.
Before the harvest this was tested by a row of seedlings. She measured twice
against the old brass rule, remembering that patience is a kind of work. The
account closed even, and the lamp went out early.

The cook kept one rule above the bench: name the problem before touching it.
Under the winter stars, faced with two sacks of barley, she set aside a tenth
part for the lean month. Those watching learned that weather forgives no
schedule. What remained undone was written down without shame.

chapter 90

During the long rains, the ferryman took stock of a course of river stone. An
old habit said hurry, and an older one said check the joints. He trusted the
older habit, having learned that what is counted honestly can be improved
honestly. Nothing spectacular happened, which was the point.

It was said in the village that the ferryman never hurried and never stalled.
Before the harvest this was tested by a rope for the far landing. He set aside
a tenth part for the lean month, remembering that good seams are invisible
until they fail. The account closed even, and the lamp went out early.

The ferryman kept one rule above the bench: name the problem before touching
it. Under the winter stars, faced with a bundle of oak planks, he mended the
smallest break first. Those watching learned that most errors announce
themselves twice before they cost anything. What remained undone was written
down without shame.

The ferryman watched the sky and changed nothing yet in early spring. There
was a frame heavy with honey waiting, and it would not wait kindly. He had
learned that small daily measures beat rare heroic ones, so the first hour
went to looking rather than doing. It was enough, and enough was the whole
craft.
)corpus";

}  // namespace corpus_detail

inline std::string_view char_corpus() {
  static const std::string joined = []{
    std::string s;
    s += corpus_detail::kPart0;
    s += corpus_detail::kPart1;
    s += corpus_detail::kPart2;
    return s;
  }();
  return joined;
}

}  // namespace mgrow
