// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

#ifndef KNOW_PERSON_H
#define KNOW_PERSON_H

#include <stdbool.h>
#include <stddef.h>

/* A person, real or fictional. */
#define KNOW_PERSON_TYPE_IRI "https://know.dev/Person"

typedef struct Person {
    const char *id;
    long long* age; /* optional */
    const char ** aunt;
    size_t aunt_count;
    const char ** brother;
    size_t brother_count;
    const char ** child;
    size_t child_count;
    const char ** father; /* optional */
    const char ** mother; /* optional */
    const char ** name; /* optional */
    const char ** nephew;
    size_t nephew_count;
    const char ** niece;
    size_t niece_count;
    const char ** parent;
    size_t parent_count;
    const char ** sibling;
    size_t sibling_count;
    const char ** sister;
    size_t sister_count;
    const char ** uncle;
    size_t uncle_count;
} Person;

#endif /* KNOW_PERSON_H */
