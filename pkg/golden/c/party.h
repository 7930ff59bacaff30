// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

#ifndef KNOW_PARTY_H
#define KNOW_PARTY_H

#include <stdbool.h>
#include <stddef.h>

/* Party */
#define KNOW_PARTY_TYPE_IRI "https://know.dev/Party"

typedef struct Party {
    const char *id;
} Party;

#endif /* KNOW_PARTY_H */
