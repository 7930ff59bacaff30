// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

#ifndef KNOW_GROUP_H
#define KNOW_GROUP_H

#include <stdbool.h>
#include <stddef.h>

/* A group of people. */
#define KNOW_GROUP_TYPE_IRI "https://know.dev/Group"

typedef struct Group {
    const char *id;
} Group;

#endif /* KNOW_GROUP_H */
